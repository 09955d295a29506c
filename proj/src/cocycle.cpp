#include "hadz/cocycle.hpp"

#include <algorithm>

namespace hadz {

SignMatrix coboundary_matrix(int d, GroupParams p) {
    const int n = p.order();
    if (d < 1 || d > n)
        throw std::out_of_range("coboundary index " + std::to_string(d) + " out of 1.." +
                                std::to_string(n));
    SignMatrix m(n);
    // delta(i) * delta(j) * delta(i*j): negative iff an odd number of the
    // three arguments equals g_d.
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int neg = (i == d) + (j == d) + (multiply_indices(i, j, p) == d);
            if (neg & 1) m.set(i, j, -1);
        }
    }
    return m;
}

SignMatrix generalized_coboundary_matrix(int d, GroupParams p) {
    SignMatrix m = coboundary_matrix(d, p);
    m.negate_row(d);
    return m;
}

SignMatrix representative_matrix(GroupParams p) {
    const int n = p.order();
    SignMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.set(i, j, static_cast<int8_t>(rep_sign((i - 1) & 3, (j - 1) & 3)));
    return m;
}

SignMatrix assemble(const CoboundarySet& s, Assembly conv) {
    const GroupParams p = s.params();
    const int n = p.order();
    // a(x) = -1 iff index(x) is in the set; the pointwise product of the
    // coboundary matrices collapses to a(g_i) a(g_j) a(g_i g_j), and the
    // generalized variant drops the a(g_i) factor (its row negations cancel
    // against it).
    std::vector<int8_t> a(static_cast<size_t>(n) + 1, 1);
    for (int k : s.indices()) a[static_cast<size_t>(k)] = -1;

    SignMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        const int qi = (i - 1) / 4, ui = (i - 1) & 3;
        const int8_t ai = (conv == Assembly::Raw) ? a[static_cast<size_t>(i)] : static_cast<int8_t>(1);
        for (int j = 1; j <= n; ++j) {
            int q = qi + (j - 1) / 4;
            if (q >= p.t) q -= p.t;
            const int uj = (j - 1) & 3;
            const int ij = 4 * q + (ui ^ uj) + 1;
            int8_t v = static_cast<int8_t>(ai * a[static_cast<size_t>(j)] * a[static_cast<size_t>(ij)]);
            if (rep_sign(ui, uj) < 0) v = -v;
            m.set(i, j, v);
        }
    }
    return m;
}

bool is_cocycle(const SignMatrix& m, GroupParams p) {
    const int n = p.order();
    if (m.size() != n) return false;
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            const int ab = multiply_indices(a, b, p);
            for (int c = 1; c <= n; ++c) {
                const int bc = multiply_indices(b, c, p);
                if (m.at(a, b) * m.at(ab, c) * m.at(a, bc) * m.at(b, c) != 1) return false;
            }
        }
    }
    return true;
}

namespace {

SignMatrix product_over(const std::vector<int>& ds, GroupParams p) {
    SignMatrix acc(p.order());
    for (int d : ds) acc = pointwise(acc, coboundary_matrix(d, p));
    return acc;
}

SignMatrix negated(SignMatrix m) {
    for (int i = 1; i <= m.size(); ++i) m.negate_row(i);
    return m;
}

} // namespace

DroppedRelationsReport dropped_relations_check(GroupParams p) {
    const int t = p.t;
    std::vector<int> class2;
    for (int i = 0; i <= t - 1; ++i) class2.push_back(4 * i + 2);

    DroppedRelationsReport rep;
    {
        std::vector<int> ds;
        for (int i = 1; i <= t - 1; ++i) ds.push_back(4 * i + 1);
        ds.insert(ds.end(), class2.begin(), class2.end());
        rep.class1_holds = coboundary_matrix(1, p) == negated(product_over(ds, p));
    }
    {
        std::vector<int> ds;
        for (int i = 0; i <= t - 2; ++i) ds.push_back(4 * i + 3);
        ds.insert(ds.end(), class2.begin(), class2.end());
        rep.class3_holds = coboundary_matrix(4 * t - 1, p) == product_over(ds, p);
    }
    {
        std::vector<int> ds;
        for (int i = 1; i <= t - 1; ++i) ds.push_back(4 * i);
        ds.insert(ds.end(), class2.begin(), class2.end());
        rep.class4_holds = coboundary_matrix(4 * t, p) == product_over(ds, p);
    }
    return rep;
}

CoboundarySet complement_classes(const CoboundarySet& s, unsigned class_mask) {
    const GroupParams p = s.params();
    std::vector<int> out;
    out.reserve(static_cast<size_t>(p.order()));
    for (int k = 1; k <= p.order(); ++k) {
        const bool in = s.contains(k);
        const bool flip = (class_mask >> (residue4(k) - 1)) & 1u;
        if (in != flip) out.push_back(k);
    }
    return CoboundarySet(p, std::move(out));
}

std::array<CoboundarySet, 8> eight_expressions(const CoboundarySet& s) {
    // Even-size complement patterns over the four classes; bit c-1 <-> class c.
    static constexpr unsigned kPatterns[8] = {
        0u,                      // {}
        0b0011u,                 // {1,2}
        0b0110u,                 // {2,3}
        0b1010u,                 // {2,4}
        0b0101u,                 // {1,3}
        0b1001u,                 // {1,4}
        0b1100u,                 // {3,4}
        0b1111u,                 // {1,2,3,4}
    };
    return {complement_classes(s, kPatterns[0]), complement_classes(s, kPatterns[1]),
            complement_classes(s, kPatterns[2]), complement_classes(s, kPatterns[3]),
            complement_classes(s, kPatterns[4]), complement_classes(s, kPatterns[5]),
            complement_classes(s, kPatterns[6]), complement_classes(s, kPatterns[7])};
}

CoboundarySet minimal_repartition(const CoboundarySet& s) {
    auto exprs = eight_expressions(s);
    const CoboundarySet* best = &exprs[0];
    for (const auto& e : exprs) {
        if (e.count() < best->count() || (e.count() == best->count() && e < *best)) best = &e;
    }
    return *best;
}

CoboundarySet canonical_key(const CoboundarySet& s) {
    auto exprs = eight_expressions(s);
    const CoboundarySet* best = &exprs[0];
    for (const auto& e : exprs)
        if (e < *best) best = &e;
    return *best;
}

SignMatrix row_sign_normalized(const SignMatrix& m) {
    SignMatrix r = m;
    for (int i = 1; i <= r.size(); ++i)
        if (r.at(i, 1) < 0) r.negate_row(i);
    return r;
}

} // namespace hadz
