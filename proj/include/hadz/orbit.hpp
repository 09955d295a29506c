#pragma once

#include <vector>

#include "hadz/coboundary_set.hpp"

namespace hadz {

// Sub-orbit sizes under the four operation families, in the product notation
// complement x rotation x swap x dilatation. dilatation is the number of new
// matrices contributed per complement/rotation/swap orbit; when the closure
// size does not factor this way the record is marked non-product
// (product_matches = false, dilatation = 0).
struct OrbitFactors {
    long long complement = 1;
    long long rotation = 1;
    long long swaps = 1;
    long long dilatation = 1;
    bool product_matches = false;
};

struct OrbitRecord {
    CoboundarySet representative;
    std::vector<std::vector<int>> members; // canonical keys, sorted lexicographically
    long long size = 0;
    OrbitFactors factors;
    // True when the orbit contains a member with a symmetric diagram; only
    // then do the symmetry criteria participate in representative selection.
    bool symmetric = false;
};

// Breadth-first closure under C2, rotations, the six swaps and all coprime
// dilatations, deduplicated by canonical key. Fills members, size, factors
// and the canonical representative.
OrbitRecord total_orbit(const CoboundarySet& s);

// Recomputes the factor decomposition for an orbit given one of its members.
OrbitFactors factorize_orbit(const CoboundarySet& member, long long total_size);

// Canonical representative: among all eight expressions of all members, the
// set with minimal coboundary count whose diagram is symmetric about the
// central column ceil(t/2) and has non-decreasing row mark-counts, ties broken
// by lexicographically smallest index list. When no member is symmetric the
// symmetry criteria are skipped (the record is flagged).
CoboundarySet representative(const OrbitRecord& rec);

} // namespace hadz
