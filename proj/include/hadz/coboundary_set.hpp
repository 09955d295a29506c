#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "hadz/group.hpp"

namespace hadz {

// A set of coboundary indices at fixed t: a strictly increasing list of
// integers in [1, 4t]. The derived class partition groups indices by their
// residue [k]_4 in {1,2,3,4} (residue 0 written 4); display order follows the
// 2,3,4,1 convention of diagram rows.
class CoboundarySet {
public:
    CoboundarySet(GroupParams p, std::vector<int> indices);

    static CoboundarySet empty(GroupParams p) { return CoboundarySet(p, {}); }

    GroupParams params() const { return p_; }
    int t() const { return p_.t; }
    const std::vector<int>& indices() const { return idx_; }
    int count() const { return static_cast<int>(idx_.size()); }

    bool contains(int k) const { return std::binary_search(idx_.begin(), idx_.end(), k); }

    // classes()[c-1] holds the (sorted) indices with residue4 == c.
    std::array<std::vector<int>, 4> classes() const;
    int class_count(int c) const;

    bool operator==(const CoboundarySet& o) const { return p_ == o.p_ && idx_ == o.idx_; }
    // Lexicographic order on the sorted index list; the tie-break and
    // canonical-key order used everywhere.
    bool operator<(const CoboundarySet& o) const { return idx_ < o.idx_; }

private:
    GroupParams p_;
    std::vector<int> idx_;
};

} // namespace hadz
