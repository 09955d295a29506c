#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hadz {

// Parameters of the group G = Z_t x Z_2^2 (order 4t). The census machinery
// only makes sense for odd t, so even t is rejected at construction.
struct GroupParams {
    int t;

    explicit GroupParams(int t_) : t(t_) {
        if (t < 3 || t % 2 == 0)
            throw std::invalid_argument("t must be odd and >= 3, got " + std::to_string(t));
    }

    int order() const { return 4 * t; }
    bool operator==(const GroupParams&) const = default;
};

// An element (q, u) with q in Z_t and u in Z_2^2.
//
// u is packed as a 2-bit code c with u1 = c & 1 and u2 = (c >> 1) & 1, so the
// four Z_2^2 elements are numbered (0,0) -> 0, (1,0) -> 1, (0,1) -> 2,
// (1,1) -> 3. Elements are enumerated as k = 4q + c + 1, k in 1..4t: the
// identity is k = 1, and the residue [k]_4 in {1,2,3,4} (residue 0 written 4)
// identifies the Z_2^2 part. This ordering puts the coboundaries 2,3,4,1 in
// the right-most diagram column and makes rows k = 1 mod 4 the (q, identity)
// rows; the calibration suite (dropped relations + catalog representatives)
// pins it down.
struct GroupElement {
    int q = 0;
    int u = 0; // 2-bit code

    bool operator==(const GroupElement&) const = default;
};

// Residue [k]_4 in {1,2,3,4}; the congruency class of a coboundary index.
inline int residue4(int k) { return (k - 1) % 4 + 1; }

GroupElement element_of_index(int k, GroupParams p);
int index_of_element(GroupElement g, GroupParams p);
GroupElement multiply(GroupElement a, GroupElement b, GroupParams p);
GroupElement inverse(GroupElement a, GroupParams p);

// Index of g_i * g_j; avoids materialising elements in hot loops.
inline int multiply_indices(int i, int j, GroupParams p) {
    const int qi = (i - 1) / 4, ui = (i - 1) & 3;
    const int qj = (j - 1) / 4, uj = (j - 1) & 3;
    int q = qi + qj;
    if (q >= p.t) q -= p.t;
    return 4 * q + (ui ^ uj) + 1;
}

inline int inverse_index(int k, GroupParams p) {
    const int q = (k - 1) / 4, u = (k - 1) & 3;
    return 4 * ((p.t - q) % p.t) + u + 1;
}

// Sign of the representative cocycle restricted to Z_2^2 (u-codes a, b):
// (-1)^(u1*v1 + u2*v2 + u2*v1). Independent of the Z_t parts.
inline int rep_sign(int a, int b) {
    const int e = (a & b & 1) ^ ((a >> 1) & (b >> 1) & 1) ^ ((a >> 1) & b & 1);
    return e ? -1 : 1;
}

} // namespace hadz
