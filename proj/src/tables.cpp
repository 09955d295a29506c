#include "hadz/tables.hpp"

namespace hadz {

CoboundarySet CatalogOrbit::set() const {
    std::vector<int> idx;
    for (const auto& cls : classes) idx.insert(idx.end(), cls.begin(), cls.end());
    return CoboundarySet(GroupParams(t), std::move(idx));
}

const std::vector<CatalogOrbit>& catalog_orbits() {
    static const std::vector<CatalogOrbit> kOrbits = {
        {3, {{{}, {7}, {8}, {5}}}, 24, {2, 3, 4, 1}, nullptr},
        {5, {{{10}, {11}, {8, 16}, {1, 17}}}, 120, {2, 5, 12, 1}, nullptr},

        {7, {{{14}, {11, 15, 19}, {8, 16, 24}, {1, 13, 25}}}, 336, {2, 7, 24, 1}, nullptr},
        {7, {{{10, 18}, {11, 19}, {4, 28}, {1, 13, 25}}}, 504, {2, 7, 12, 3}, nullptr},

        {9, {{{14, 22}, {15, 19, 23}, {4, 16, 24, 36}, {1, 13, 21, 33}}}, 648,
         {2, 9, 12, 3}, nullptr},
        {9, {{{14, 22}, {3, 19, 35}, {12, 16, 24, 28}, {1, 9, 25, 33}}}, 1296,
         {2, 9, 24, 3}, nullptr},
        {9, {{{14, 18, 22}, {11, 19, 27}, {8, 20, 32}, {1, 17, 33}}}, 432,
         {2, 9, 24, 1}, nullptr},

        {11, {{{18, 22, 26}, {7, 15, 31, 39}, {4, 16, 32, 44}, {9, 13, 21, 29, 33}}}, 2640,
         {2, 11, 24, 5}, nullptr},

        {13, {{{22, 26, 30}, {3, 15, 23, 31, 39, 51}, {8, 16, 20, 36, 40, 48},
               {1, 5, 17, 33, 45, 49}}}, 3744, {2, 13, 24, 6},
         "source row prints factors 2x13x24x3 next to size 3744; the factors multiply to 1872, "
         "and only size 3744 makes the t=13 total equal 8424, so the dilatation factor is 6"},
        {13, {{{18, 22, 30, 34}, {7, 15, 39, 47}, {8, 12, 24, 32, 44, 48},
               {1, 5, 21, 29, 45, 49}}}, 1872, {2, 13, 24, 3}, nullptr},
        {13, {{{14, 18, 34, 38}, {15, 23, 27, 31, 39}, {8, 24, 28, 32, 48},
               {5, 17, 25, 33, 45}}}, 1872, {2, 13, 24, 3}, nullptr},
        {13, {{{14, 18, 34, 38}, {15, 19, 27, 35, 39}, {4, 12, 28, 44, 52},
               {1, 9, 25, 41, 49}}}, 936, {2, 13, 12, 3}, nullptr},

        {15, {{{18, 22, 38, 42}, {7, 19, 27, 35, 43, 55}, {16, 20, 28, 32, 36, 44, 48},
               {1, 9, 25, 29, 33, 49, 57}}}, 2880, {2, 15, 24, 4}, nullptr},
        {15, {{{10, 14, 46, 50}, {7, 19, 27, 35, 43, 55}, {8, 12, 24, 32, 40, 52, 56},
               {1, 5, 9, 29, 49, 53, 57}}}, 2880, {2, 15, 24, 4}, nullptr},
        {15, {{{14, 26, 34, 46}, {11, 15, 27, 35, 47, 51}, {16, 20, 28, 32, 36, 44, 48},
               {1, 5, 21, 29, 37, 53, 57}}}, 1440, {2, 15, 24, 2}, nullptr},
        {15, {{{14, 26, 30, 34, 46}, {15, 27, 31, 35, 47}, {12, 16, 24, 40, 48, 52},
               {9, 13, 21, 29, 37, 45, 49}}}, 1440, {2, 15, 12, 4}, nullptr},

        {17, {{{18, 30, 34, 38, 50}, {3, 23, 31, 35, 39, 47, 67},
               {16, 20, 28, 36, 44, 52, 56}, {1, 13, 21, 25, 41, 45, 53, 65}}}, 3264,
         {2, 17, 24, 4}, nullptr},
        {17, {{{18, 30, 34, 38, 50}, {3, 23, 27, 35, 43, 47, 67},
               {4, 16, 28, 36, 44, 56, 68}, {13, 17, 21, 29, 37, 45, 49, 53}}}, 3264,
         {2, 17, 24, 4}, nullptr},
        {17, {{{18, 30, 34, 38, 50}, {7, 15, 31, 35, 39, 55, 63},
               {12, 20, 24, 36, 48, 52, 60}, {5, 9, 13, 21, 45, 53, 57, 61}}}, 3264,
         {2, 17, 24, 4}, nullptr},
        {17, {{{18, 26, 30, 38, 42, 50}, {3, 19, 31, 39, 51, 67},
               {8, 24, 32, 36, 40, 48, 64}, {9, 13, 17, 33, 49, 53, 57}}}, 3264,
         {2, 17, 24, 4}, nullptr},

        {19, {{{18, 30, 34, 42, 46, 58}, {15, 19, 23, 39, 55, 59, 63},
               {8, 16, 28, 36, 40, 44, 52, 64, 72}, {5, 21, 25, 29, 37, 45, 49, 53, 69}}}, 8208,
         {2, 19, 24, 9}, nullptr},
        {19, {{{10, 30, 34, 42, 46, 66}, {11, 31, 35, 39, 43, 47, 67},
               {4, 12, 16, 32, 40, 48, 64, 68, 76}, {1, 9, 13, 29, 37, 45, 61, 65, 73}}}, 4104,
         {2, 19, 12, 9}, nullptr},
        {19, {{{10, 30, 34, 42, 46, 66}, {15, 27, 35, 39, 43, 51, 63},
               {8, 16, 32, 36, 40, 44, 48, 64, 72}, {5, 9, 25, 33, 37, 41, 49, 65, 69}}}, 8208,
         {2, 19, 24, 9}, nullptr},
        {19, {{{6, 10, 34, 42, 66, 70}, {11, 23, 27, 35, 43, 51, 55, 67},
               {8, 16, 20, 36, 44, 60, 64, 72}, {1, 5, 9, 29, 45, 65, 69, 73}}}, 2736,
         {2, 19, 24, 3},
         "source row prints size 2376, but its own factors 2x19x24x3 multiply to 2736 and only "
         "2736 makes the t=19 total equal 34200; using 2736"},
        {19, {{{6, 10, 34, 42, 66, 70}, {7, 15, 31, 35, 43, 47, 63, 71},
               {12, 20, 24, 36, 44, 56, 60, 68}, {1, 5, 9, 25, 49, 65, 69, 73}}}, 2736,
         {2, 19, 24, 3}, nullptr},
        {19, {{{22, 30, 34, 42, 46, 54}, {7, 15, 19, 35, 43, 59, 63, 71},
               {4, 16, 20, 36, 44, 60, 64, 76}, {9, 13, 17, 25, 49, 57, 61, 65}}}, 8208,
         {2, 19, 24, 9}, nullptr},

        {21, {{{22, 26, 38, 46, 58, 62}, {3, 15, 19, 27, 39, 47, 59, 67, 71, 83},
               {8, 12, 16, 24, 40, 48, 64, 72, 76, 80},
               {13, 21, 25, 29, 33, 49, 53, 57, 61, 69}}}, 2016, {2, 21, 24, 2},
         "source row lists 27 (a class-3 index, already present there) inside the class-1 set; "
         "the unique class-1 index restoring diagram symmetry is 57"},
        {21, {{{10, 34, 38, 42, 46, 50, 74}, {3, 19, 23, 31, 55, 63, 67, 83},
               {12, 24, 28, 36, 44, 52, 60, 64, 76},
               {5, 9, 13, 21, 33, 49, 61, 69, 73, 77}}}, 6048, {2, 21, 24, 6}, nullptr},
        {21, {{{18, 26, 38, 42, 46, 58, 66}, {19, 23, 31, 35, 51, 55, 63, 67},
               {12, 16, 32, 40, 44, 48, 56, 72, 76},
               {1, 5, 17, 29, 37, 45, 53, 65, 77, 81}}}, 6048, {2, 21, 24, 6}, nullptr},
        {21, {{{18, 26, 38, 42, 46, 58, 66}, {11, 23, 27, 35, 51, 59, 63, 75},
               {12, 16, 32, 40, 44, 48, 56, 72, 76},
               {1, 5, 9, 25, 37, 45, 57, 73, 77, 81}}}, 6048, {2, 21, 24, 6}, nullptr},
        {21, {{{6, 30, 34, 38, 46, 50, 54, 78}, {7, 31, 35, 39, 47, 51, 55, 79},
               {8, 16, 20, 36, 52, 68, 72, 80}, {5, 13, 17, 33, 41, 49, 65, 69, 77}}}, 3024,
         {2, 21, 12, 6},
         "source row omits 8 (class 4) and 5 (class 1), breaking diagram symmetry at the "
         "column-2/20 mirror pair in both rows; restoring both yields a Hadamard set whose "
         "orbit is exactly the printed 2x21x12x6 = 3024"},
        {21, {{{18, 30, 34, 38, 46, 50, 54, 66}, {3, 7, 31, 39, 47, 55, 79, 83},
               {8, 24, 32, 36, 52, 56, 64, 80}, {1, 17, 21, 29, 41, 53, 61, 65, 81}}}, 6048,
         {2, 21, 24, 6}, nullptr},
        {21, {{{14, 18, 30, 38, 46, 54, 66, 70}, {7, 15, 27, 31, 55, 59, 71, 79},
               {8, 16, 20, 24, 64, 68, 72, 80}, {13, 21, 25, 37, 41, 45, 57, 61, 69}}}, 2016,
         {2, 21, 24, 2},
         "source row prints 12 in the class-4 set, breaking diagram symmetry (columns 19 and 4 "
         "unmatched) and Hadamard-ness; 16 restores both and gives exactly the printed "
         "2x21x24x2 = 2016 orbit"},

        {23, {{{22, 30, 38, 42, 50, 54, 62, 70}, {15, 19, 23, 35, 47, 59, 71, 75, 79},
               {12, 20, 28, 40, 44, 52, 56, 68, 76, 84},
               {9, 13, 25, 29, 33, 57, 61, 65, 77, 81}}}, 12144, {2, 23, 24, 11}, nullptr},
    };
    return kOrbits;
}

std::vector<CatalogOrbit> catalog_orbits_for(int t) {
    std::vector<CatalogOrbit> out;
    for (const auto& o : catalog_orbits())
        if (o.t == t) out.push_back(o);
    return out;
}

long long expected_census(int t) {
    switch (t) {
    case 3: return 24;
    case 5: return 120;
    case 7: return 840;
    case 9: return 2376;
    case 11: return 2640;
    case 13: return 8424;
    case 15: return 8640;
    case 17: return 13056;
    case 19: return 34200;
    case 21: return 31248;
    case 23: return 12144;
    default: return -1;
    }
}

long long expected_williamson(int t) {
    switch (t) {
    case 3: return 8;
    case 5: return 24;
    case 7: return 120;
    case 9: return 264;
    case 11: return 240;
    case 13: return 648;
    case 15: return 576;
    case 17: return 768;  // 13056 / 17
    case 19: return 1800; // 34200 / 19
    default: return -1;
    }
}

} // namespace hadz
