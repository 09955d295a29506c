#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "hadz/cocycle.hpp"
#include "hadz/diagram.hpp"
#include "hadz/errors.hpp"
#include "hadz/hadamard.hpp"
#include "hadz/ops.hpp"
#include "hadz/search.hpp"

using namespace hadz;

namespace {

const std::vector<int> kWorked7 = {14, 10, 6, 11, 20, 12, 4, 25, 21, 9};

CoboundarySet random_subset(GroupParams p, std::mt19937& rng) {
    std::vector<int> idx;
    for (int k = 1; k <= p.order(); ++k)
        if (rng() & 1) idx.push_back(k);
    return CoboundarySet(p, std::move(idx));
}

std::vector<CoboundarySet> census(int t) {
    SearchConfig cfg;
    cfg.t = t;
    return exhaustive_search(cfg).hits;
}

} // namespace

TEST_CASE("complement C2: reference example") {
    GroupParams p(7);
    CoboundarySet in(p, {14, 10, 6, 11, 28, 12, 4, 25, 21, 9});
    CoboundarySet want(p, {26, 22, 18, 2, 11, 28, 12, 4, 25, 21, 9});
    CHECK(complement(in, 2) == want);
    CHECK(complement(complement(in, 2), 2) == in);
    // class-2 count maps k0 -> t - k0
    CHECK(complement(in, 2).class_count(2) == 7 - in.class_count(2));
}

TEST_CASE("complement flips one diagram row") {
    std::mt19937 rng(3);
    GroupParams p(9);
    for (int i = 0; i < 50; ++i) {
        CoboundarySet s = random_subset(p, rng);
        for (int cls = 1; cls <= 4; ++cls) {
            Diagram before = to_diagram(s);
            Diagram after = to_diagram(complement(s, cls));
            const int flipped_row = cls == 1 ? 4 : cls - 1; // rows hold classes 2,3,4,1
            for (int row = 1; row <= 4; ++row)
                for (int col = 1; col <= p.t; ++col)
                    CHECK(after.mark(row, col) ==
                          (row == flipped_row ? !before.mark(row, col) : before.mark(row, col)));
        }
    }
}

TEST_CASE("rotation: reference example, identity, composition") {
    GroupParams p(7);
    CoboundarySet in(p, kWorked7);
    CoboundarySet want(p, {6, 2, 26, 3, 12, 4, 24, 17, 13, 1});
    CHECK(rotate(in, 2) == want);
    CHECK(rotate(in, 0) == in);

    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        CoboundarySet s = random_subset(p, rng);
        for (int a = 0; a < 7; ++a)
            for (int b = 0; b < 7; ++b)
                CHECK(rotate(rotate(s, a), b) == rotate(s, (a + b) % 7));
    }
}

TEST_CASE("rotation shifts diagram columns rightward") {
    GroupParams p(7);
    CoboundarySet s(p, kWorked7);
    Diagram before = to_diagram(s);
    Diagram after = to_diagram(rotate(s, 2));
    for (int row = 1; row <= 4; ++row)
        for (int col = 1; col <= 7; ++col)
            CHECK(after.mark(row, (col + 2 - 1) % 7 + 1) == before.mark(row, col));
}

TEST_CASE("swaps: the s23 image of the reference set") {
    GroupParams p(7);
    CoboundarySet in(p, kWorked7);
    CoboundarySet want(p, {10, 15, 11, 7, 20, 12, 4, 25, 21, 9});
    CHECK(swap_classes(in, Swap::S23) == want);
    CHECK(is_hadamard(assemble(want)));
}

TEST_CASE("swaps are involutions and transpose diagram rows") {
    std::mt19937 rng(11);
    GroupParams p(9);
    const std::pair<Swap, std::pair<int, int>> rows_of[6] = {
        {Swap::S23, {1, 2}}, {Swap::S24, {1, 3}}, {Swap::S21, {1, 4}},
        {Swap::S34, {2, 3}}, {Swap::S31, {2, 4}}, {Swap::S41, {3, 4}},
    };
    for (int i = 0; i < 30; ++i) {
        CoboundarySet s = random_subset(p, rng);
        for (const auto& [g, rows] : rows_of) {
            CoboundarySet im = swap_classes(s, g);
            CHECK(swap_classes(im, g) == s);
            Diagram before = to_diagram(s);
            Diagram after = to_diagram(im);
            for (int row = 1; row <= 4; ++row) {
                int src = row == rows.first ? rows.second : row == rows.second ? rows.first : row;
                for (int col = 1; col <= p.t; ++col)
                    CHECK(after.mark(row, col) == before.mark(src, col));
            }
        }
    }
}

TEST_CASE("swap compositions generate all 24 row permutations") {
    // a diagram with 4 distinct rows has swap orbit exactly 24
    GroupParams p(7);
    CoboundarySet s(p, {2, 7, 3, 12, 8, 21});
    std::set<std::vector<int>> orbit{s.indices()};
    std::vector<CoboundarySet> frontier{s};
    while (!frontier.empty()) {
        std::vector<CoboundarySet> next;
        for (const auto& cur : frontier)
            for (int g = 0; g < 6; ++g) {
                CoboundarySet im = swap_classes(cur, static_cast<Swap>(g));
                if (orbit.insert(im.indices()).second) next.push_back(im);
            }
        frontier = std::move(next);
    }
    CHECK(orbit.size() == 24);
}

TEST_CASE("dilatation: reference example and conventions") {
    GroupParams p(7);
    CoboundarySet in(p, kWorked7);
    CoboundarySet want(p, {26, 18, 10, 19, 20, 8, 4, 21, 17, 13});
    CHECK(dilate(in, 2) == want);
    CHECK(dilate(in, 1) == in);

    // V_2(20) = 8 at t=7: pins the residue convention [k]_4 in {1,2,3,4}
    CHECK(dilate(CoboundarySet(p, {20}), 2) == CoboundarySet(p, {8}));

    CHECK_THROWS_AS(dilate(CoboundarySet(GroupParams(9), {2}), 3), NotCoprimeError);
    CHECK_THROWS_AS(dilate(in, 0), NotCoprimeError);
}

TEST_CASE("dilatation is a class-preserving bijection and a column homothecy") {
    GroupParams p(9);
    for (int r : {1, 2, 4, 5, 7, 8}) {
        std::set<int> image;
        for (int k = 1; k <= p.order(); ++k) {
            CoboundarySet im = dilate(CoboundarySet(p, {k}), r);
            CHECK(im.indices().size() == 1);
            const int h = im.indices()[0];
            CHECK(residue4(h) == residue4(k));
            image.insert(h);
            // column at distance m from the right goes to distance r*m mod t
            auto [row, col] = Diagram::cell_of_index(k, p);
            auto [row2, col2] = Diagram::cell_of_index(h, p);
            CHECK(row2 == row);
            CHECK((p.t - col2) % p.t == (static_cast<long long>(p.t - col) * r) % p.t);
        }
        CHECK(image.size() == static_cast<size_t>(p.order()));
    }
}

TEST_CASE("complement and rotation commute; swaps commute at the matrix level") {
    std::mt19937 rng(13);
    GroupParams p(7);
    for (int i = 0; i < 30; ++i) {
        CoboundarySet s = random_subset(p, rng);
        for (int r = 0; r < 7; ++r)
            CHECK(rotate(complement(s, 2), r) == complement(rotate(s, r), 2));
        for (int g = 0; g < 6; ++g) {
            const Swap sw = static_cast<Swap>(g);
            for (int r = 0; r < 7; ++r)
                CHECK(rotate(swap_classes(s, sw), r) == swap_classes(rotate(s, r), sw));
            // complement then swap lands on the same matrix as swap then complement
            CHECK(canonical_key(swap_classes(complement(s, 2), sw)) ==
                  canonical_key(complement(swap_classes(s, sw), 2)));
        }
    }
}

TEST_CASE("operations are well-defined on matrices") {
    std::mt19937 rng(19);
    GroupParams p(7);
    std::vector<Operation> ops = parse_operations("C2,T:3,S:31,V:2");
    for (int i = 0; i < 25; ++i) {
        CoboundarySet s = random_subset(p, rng);
        for (const auto& op : ops) {
            const CoboundarySet key = canonical_key(apply(s, op));
            for (const auto& e : eight_expressions(s)) CHECK(canonical_key(apply(e, op)) == key);
        }
    }
}

TEST_CASE("every operation maps symmetric diagrams to symmetric diagrams") {
    std::mt19937 rng(23);
    GroupParams p(9);
    int seen = 0;
    while (seen < 20) {
        CoboundarySet s = random_subset(p, rng);
        // symmetrize about column 5 by mirroring marks
        Diagram d = to_diagram(s);
        for (int row = 1; row <= 4; ++row)
            for (int off = 1; off <= 4; ++off) {
                const int a = (5 + off - 1) % 9 + 1, b = ((5 - off - 1) % 9 + 9) % 9 + 1;
                d.set_mark(row, b, d.mark(row, a));
            }
        CoboundarySet sym = from_diagram(d);
        if (symmetry_axes(to_diagram(sym)).empty()) continue;
        ++seen;
        CHECK_FALSE(symmetry_axes(to_diagram(complement(sym, 2))).empty());
        CHECK_FALSE(symmetry_axes(to_diagram(rotate(sym, 3))).empty());
        CHECK_FALSE(symmetry_axes(to_diagram(swap_classes(sym, Swap::S24))).empty());
        CHECK_FALSE(symmetry_axes(to_diagram(dilate(sym, 2))).empty());
    }
}

TEST_CASE("operation token parsing") {
    CHECK(parse_operation("C2").kind == Operation::Kind::Complement);
    CHECK(parse_operation("T:3").arg == 3);
    CHECK(parse_operation("S:41").swap == Swap::S41);
    CHECK(parse_operation("V:2").kind == Operation::Kind::Dilate);
    CHECK(parse_operations("C2,T:3,V:2").size() == 3);
    CHECK_THROWS_AS(parse_operation("X:1"), ParseError);
    CHECK_THROWS_AS(parse_operation("C5"), ParseError);
    CHECK_THROWS_AS(parse_operation("S:25"), ParseError);
    CHECK_THROWS_AS(parse_operation(""), ParseError);
    CHECK(format_operation(parse_operation("S:34")) == "S:34");
}

TEST_CASE("a dilatation image can coincide with a swap/rotation composite") {
    // on the reference diagram, V_2 acts like s41 . s24 . T_5
    GroupParams p(7);
    CoboundarySet s(p, kWorked7);
    CoboundarySet via_ops = swap_classes(swap_classes(rotate(s, 5), Swap::S24), Swap::S41);
    CHECK(canonical_key(dilate(s, 2)) == canonical_key(via_ops));
}

TEST_CASE("all four families preserve the Hadamard property (exhaustive t=3 and t=5)") {
    for (int t : {3, 5}) {
        const auto sets = census(t);
        CHECK(static_cast<long long>(sets.size()) == (t == 3 ? 24 : 120));
        PreservationReport rep = preserves_hadamard_suite(sets);
        CHECK(rep.ok());
        // C2 + t rotations + 6 swaps + phi(t) dilatations per set
        const long long per_set = 1 + t + 6 + (t == 3 ? 2 : 4);
        CHECK(rep.checked == per_set * static_cast<long long>(sets.size()));
    }
}
