#include "hadz/group.hpp"

namespace hadz {

GroupElement element_of_index(int k, GroupParams p) {
    if (k < 1 || k > p.order())
        throw std::out_of_range("group index " + std::to_string(k) + " out of 1.." +
                                std::to_string(p.order()));
    return GroupElement{(k - 1) / 4, (k - 1) & 3};
}

int index_of_element(GroupElement g, GroupParams p) {
    if (g.q < 0 || g.q >= p.t || g.u < 0 || g.u > 3)
        throw std::out_of_range("invalid group element");
    return 4 * g.q + g.u + 1;
}

GroupElement multiply(GroupElement a, GroupElement b, GroupParams p) {
    int q = a.q + b.q;
    if (q >= p.t) q -= p.t;
    return GroupElement{q, a.u ^ b.u};
}

GroupElement inverse(GroupElement a, GroupParams p) {
    return GroupElement{(p.t - a.q) % p.t, a.u};
}

} // namespace hadz
