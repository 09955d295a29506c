#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hadz/cocycle.hpp"

namespace hadz {

// Full orthogonality check: every pair of distinct rows orthogonal.
bool is_hadamard(const SignMatrix& m);

// Row-sum Hadamard test for assembled cocyclic matrices: true iff every row
// n in [5, 2t+2] sums to zero. Agrees with is_hadamard on assembled matrices.
bool cocyclic_row_test(const SignMatrix& m, GroupParams p);
bool cocyclic_row_test(const CoboundarySet& s);

// Per-row walk statistics. paths = c_n, intersections = I_n, r = r_n.
struct RowStats {
    int n = 0;
    int paths = 0;
    int intersections = 0;
    int r = 0;
};

// Decomposition of the used generalized coboundaries into n-walks: two
// coboundaries are adjacent when they share a -1 column in row n; since each
// carries exactly two -1s per row, components are simple paths or cycles.
struct WalkComponent {
    bool cycle = false;
    std::vector<int> members; // coboundary indices in chain order
};

std::vector<WalkComponent> row_walks(const CoboundarySet& s, int n);
std::vector<RowStats> row_stats(const CoboundarySet& s); // rows 5..2t+2

struct RowIdentityRow {
    int n = 0;
    long long sum = 0;
    RowStats stats;
    bool sum_zero = false;
    bool identity_holds = false; // 2 c_n + r_n - 2 I_n == 2t
    bool agrees = false;         // sum_zero <=> identity_holds
};

struct RowIdentityReport {
    std::vector<RowIdentityRow> rows;
    bool all_agree = true;
};

// Verifies, row by row, that a zero row sum is equivalent to
// 2 c_n + r_n - 2 I_n = 2t.
RowIdentityReport row_identity_check(const CoboundarySet& s);

// Theorem-based test for sets with a symmetric diagram: true iff c_n = t for
// every row n = 1 mod 4 in [5, 2t+2] (which then implies Hadamard). Throws
// NotSymmetricError when the diagram has no axis.
bool fast_symmetric_test(const CoboundarySet& s);

// ---------------------------------------------------------------------------
// Packed representation for the search hot path. A set is held as four t-bit
// planes, one per residue class: bit q of plane v is the membership of index
// 4q + v + 1. Works for any t <= 63.
// ---------------------------------------------------------------------------

struct PlaneSet {
    std::array<uint64_t, 4> p{0, 0, 0, 0};

    bool operator==(const PlaneSet&) const = default;
};

PlaneSet planes_of(const CoboundarySet& s);
CoboundarySet set_of_planes(const PlaneSet& ps, GroupParams p);

// Precomputed row-sum tester: passes(ps) is equivalent to
// cocyclic_row_test(assemble(set)). Immutable after construction, safe to
// share across threads.
class RowTester {
public:
    explicit RowTester(GroupParams p);

    bool passes(const PlaneSet& s) const;
    GroupParams params() const { return p_; }

private:
    struct Row {
        int shift;                    // q-part of the row element
        std::array<uint8_t, 4> src;   // plane feeding each output class
        std::array<uint64_t, 4> flip; // all-ones where R is negative
    };

    GroupParams p_;
    int t_;
    uint64_t mask_;
    std::vector<Row> rows_;
};

} // namespace hadz
