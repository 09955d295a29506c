#include "hadz/hadamard.hpp"

#include <bit>

#include "hadz/diagram.hpp"
#include "hadz/errors.hpp"

namespace hadz {

bool is_hadamard(const SignMatrix& m) {
    const int n = m.size();
    // Pack rows as bitmasks (1 = negative): dot(i,j) = n - 2 popcount(xor).
    const int words = (n + 63) / 64;
    std::vector<uint64_t> bits(static_cast<size_t>(n) * words, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (m.at(i, j) < 0)
                bits[static_cast<size_t>(i - 1) * words + static_cast<size_t>(j - 1) / 64] |=
                    1ull << ((j - 1) % 64);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int diff = 0;
            for (int w = 0; w < words; ++w)
                diff += std::popcount(bits[static_cast<size_t>(i) * words + w] ^
                                      bits[static_cast<size_t>(j) * words + w]);
            if (2 * diff != n) return false;
        }
    }
    return true;
}

bool cocyclic_row_test(const SignMatrix& m, GroupParams p) {
    for (int n = 5; n <= 2 * p.t + 2; ++n)
        if (m.row_sum(n) != 0) return false;
    return true;
}

bool cocyclic_row_test(const CoboundarySet& s) {
    RowTester rt(s.params());
    return rt.passes(planes_of(s));
}

std::vector<WalkComponent> row_walks(const CoboundarySet& s, int n) {
    const GroupParams p = s.params();
    if (n < 2 || n > p.order())
        throw std::out_of_range("walk row must lie in 2..4t");
    // In row n the generalized coboundary d is negative exactly at columns d
    // and nu(d) = index(g_n^-1 g_d). Coboundaries d and nu(d) share a column,
    // so components are maximal runs of the map nu restricted to the set.
    const int ninv = inverse_index(n, p);
    auto nu = [&](int d) { return multiply_indices(ninv, d, p); };
    auto nu_back = [&](int d) { return multiply_indices(n, d, p); };

    std::vector<uint8_t> used(static_cast<size_t>(p.order()) + 1, 0);
    for (int k : s.indices()) used[static_cast<size_t>(k)] = 1;
    std::vector<uint8_t> seen(static_cast<size_t>(p.order()) + 1, 0);

    std::vector<WalkComponent> comps;
    for (int d : s.indices()) {
        if (seen[static_cast<size_t>(d)]) continue;
        // Walk backwards to the left end, or all the way around.
        int start = d;
        bool cycle = false;
        for (int prev = nu_back(start); used[static_cast<size_t>(prev)]; prev = nu_back(start)) {
            if (prev == d) { cycle = true; break; }
            start = prev;
        }
        WalkComponent comp;
        comp.cycle = cycle;
        int cur = start;
        do {
            comp.members.push_back(cur);
            seen[static_cast<size_t>(cur)] = 1;
            cur = nu(cur);
        } while (used[static_cast<size_t>(cur)] && cur != start);
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<RowStats> row_stats(const CoboundarySet& s) {
    const GroupParams p = s.params();
    const int n4t = p.order();

    std::vector<int8_t> a(static_cast<size_t>(n4t) + 1, 1);
    for (int k : s.indices()) a[static_cast<size_t>(k)] = -1;

    std::vector<RowStats> out;
    for (int n = 5; n <= 2 * p.t + 2; ++n) {
        RowStats rs;
        rs.n = n;
        for (const auto& comp : row_walks(s, n))
            if (!comp.cycle) ++rs.paths;
        const int un = (n - 1) & 3;
        for (int j = 1; j <= n4t; ++j) {
            if (rep_sign(un, (j - 1) & 3) >= 0) continue;
            ++rs.r;
            // Generalized coboundary product at (n, j): a(g_j) a(g_n g_j).
            if (a[static_cast<size_t>(j)] * a[static_cast<size_t>(multiply_indices(n, j, p))] < 0)
                ++rs.intersections;
        }
        out.push_back(rs);
    }
    return out;
}

RowIdentityReport row_identity_check(const CoboundarySet& s) {
    const GroupParams p = s.params();
    const SignMatrix m = assemble(s);
    RowIdentityReport rep;
    auto stats = row_stats(s);
    for (const auto& rs : stats) {
        RowIdentityRow row;
        row.n = rs.n;
        row.stats = rs;
        row.sum = m.row_sum(rs.n);
        row.sum_zero = row.sum == 0;
        row.identity_holds = 2 * rs.paths + rs.r - 2 * rs.intersections == 2 * p.t;
        row.agrees = row.sum_zero == row.identity_holds;
        rep.all_agree = rep.all_agree && row.agrees;
        rep.rows.push_back(row);
    }
    return rep;
}

bool fast_symmetric_test(const CoboundarySet& s) {
    if (symmetry_axes(to_diagram(s)).empty()) throw NotSymmetricError();
    const int t = s.t();
    for (int n = 5; n <= 2 * t + 2; n += 4) { // rows n = 1 mod 4
        int paths = 0;
        for (const auto& comp : row_walks(s, n))
            if (!comp.cycle) ++paths;
        if (paths != t) return false;
    }
    return true;
}

PlaneSet planes_of(const CoboundarySet& s) {
    PlaneSet ps;
    for (int k : s.indices()) ps.p[static_cast<size_t>((k - 1) & 3)] |= 1ull << ((k - 1) / 4);
    return ps;
}

CoboundarySet set_of_planes(const PlaneSet& ps, GroupParams p) {
    std::vector<int> idx;
    for (int v = 0; v < 4; ++v) {
        uint64_t w = ps.p[static_cast<size_t>(v)];
        while (w) {
            const int q = std::countr_zero(w);
            w &= w - 1;
            idx.push_back(4 * q + v + 1);
        }
    }
    return CoboundarySet(p, std::move(idx));
}

RowTester::RowTester(GroupParams p) : p_(p), t_(p.t) {
    if (t_ > 63) throw std::out_of_range("packed row tester supports t <= 63");
    mask_ = (1ull << t_) - 1;
    for (int n = 5; n <= 2 * t_ + 2; ++n) {
        Row r;
        r.shift = (n - 1) / 4;
        const int un = (n - 1) & 3;
        for (int v = 0; v < 4; ++v) {
            r.src[static_cast<size_t>(v)] = static_cast<uint8_t>(v ^ un);
            r.flip[static_cast<size_t>(v)] = rep_sign(un, v) < 0 ? mask_ : 0ull;
        }
        rows_.push_back(r);
    }
}

bool RowTester::passes(const PlaneSet& s) const {
    const int t = t_;
    for (const Row& r : rows_) {
        const int k = r.shift;
        int neg = 0;
        for (int v = 0; v < 4; ++v) {
            const uint64_t other = s.p[r.src[static_cast<size_t>(v)]];
            const uint64_t rot = ((other >> k) | (other << (t - k))) & mask_;
            neg += std::popcount(s.p[static_cast<size_t>(v)] ^ rot ^ r.flip[static_cast<size_t>(v)]);
        }
        if (neg != 2 * t) return false;
    }
    return true;
}

} // namespace hadz
