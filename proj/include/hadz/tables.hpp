#pragma once

#include <array>
#include <vector>

#include "hadz/coboundary_set.hpp"

namespace hadz {

// Built-in census catalog: one entry per known total orbit of Hadamard sets,
// 3 <= t <= 23. Representatives are stored in display class order 2,3,4,1.
// Entries whose published source carried an internal inconsistency (a size
// that disagrees with its own factorization, a member outside its residue
// class, a break of diagram symmetry) are corrected and carry a note saying
// what was fixed.
struct CatalogOrbit {
    int t;
    std::array<std::vector<int>, 4> classes; // class order 2,3,4,1
    long long size;                          // authoritative orbit size
    std::array<int, 4> factors;              // complement/rotation/swap/dilatation
    const char* note;                        // nullptr when the source row was consistent

    CoboundarySet set() const;
};

const std::vector<CatalogOrbit>& catalog_orbits();
std::vector<CatalogOrbit> catalog_orbits_for(int t);

// Known census totals (sum of orbit sizes): t = 3..23, or -1 if unknown.
long long expected_census(int t);

// Known Williamson-positioned counts: t = 3..19, or -1 if unknown. Values for
// t = 17, 19 are census/t (the proportion argument); the rest are tabulated.
long long expected_williamson(int t);

} // namespace hadz
