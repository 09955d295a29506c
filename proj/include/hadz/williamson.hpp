#pragma once

#include <array>
#include <istream>
#include <vector>

#include "hadz/coboundary_set.hpp"
#include "hadz/sign_matrix.hpp"

namespace hadz {

// True iff the diagram's symmetry-axis set contains the right-most column t.
bool is_williamson_position(const CoboundarySet& s);

// The unique rotation index i with T_i(s) symmetric about column t. Throws
// NoAxisError when the diagram has no axis at all.
int williamson_rotation(const CoboundarySet& s);

// Block data of a Williamson-positioned set. The assembled cocyclic matrix
// itself is not block back-circulant; negating the columns indexed by the set
// produces a Hadamard-equivalent matrix that is, with every 4x4 block in the
// symbol pattern
//      n  x  y  z
//      x -n  z -y
//      y -z -n  x
//      z  y -x -n
// and W_{i+1} = W_{t-i+1}. Blocks, symbols and quadruple sums are read off
// that normal form after verifying all of this entry by entry.
struct WilliamsonBlockData {
    int t = 0;
    std::vector<std::array<std::array<int8_t, 4>, 4>> blocks; // W_1 .. W_t
    std::vector<int8_t> n, x, y, z;                           // symbols per block
    int A = 0, B = 0, C = 0, D = 0;                           // |sum n|, |sum x|, |sum y|, |sum z|
    bool assembled_literally_circulant = false; // whether assemble(s) was already circulant
};

WilliamsonBlockData extract_quadruple(const CoboundarySet& s);

// Williamson normal form: the assembled matrix with the columns indexed by
// the set negated.
SignMatrix williamson_form(const CoboundarySet& s);

// Number of Williamson-positioned matrices in a census (one set per matrix).
long long williamson_count(const std::vector<CoboundarySet>& census);

// Parses JSON lines {"t": int, "set": [ints]} and verifies each set is
// Hadamard; the entry point for orbit expansion from externally catalogued
// matrices. Throws ParseError / NotHadamardSeedError.
std::vector<CoboundarySet> ingest_external_seed(std::istream& in);

} // namespace hadz
