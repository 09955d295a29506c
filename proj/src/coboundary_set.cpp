#include "hadz/coboundary_set.hpp"

#include <stdexcept>
#include <string>

#include "hadz/errors.hpp"

namespace hadz {

CoboundarySet::CoboundarySet(GroupParams p, std::vector<int> indices)
    : p_(p), idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end());
    for (size_t i = 0; i < idx_.size(); ++i) {
        if (idx_[i] < 1 || idx_[i] > p_.order())
            throw ParseError("coboundary index " + std::to_string(idx_[i]) + " out of 1.." +
                             std::to_string(p_.order()));
        if (i > 0 && idx_[i] == idx_[i - 1])
            throw ParseError("duplicate coboundary index " + std::to_string(idx_[i]));
    }
}

std::array<std::vector<int>, 4> CoboundarySet::classes() const {
    std::array<std::vector<int>, 4> by;
    for (int k : idx_) by[residue4(k) - 1].push_back(k);
    return by;
}

int CoboundarySet::class_count(int c) const {
    int n = 0;
    for (int k : idx_) n += residue4(k) == c;
    return n;
}

} // namespace hadz
