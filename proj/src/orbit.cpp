#include "hadz/orbit.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "hadz/cocycle.hpp"
#include "hadz/diagram.hpp"
#include "hadz/ops.hpp"

namespace hadz {

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

using KeySet = std::unordered_set<std::vector<int>, VecHash>;

enum GenFlags : unsigned {
    kComplement = 1u,
    kRotation = 2u,
    kSwaps = 4u,
    kDilatation = 8u,
};

KeySet closure(const CoboundarySet& start, unsigned gens) {
    const GroupParams p = start.params();
    KeySet seen;
    std::deque<std::vector<int>> frontier;
    auto push = [&](const CoboundarySet& s) {
        auto key = canonical_key(s).indices();
        if (seen.insert(key).second) frontier.push_back(std::move(key));
    };
    push(start);
    while (!frontier.empty()) {
        CoboundarySet cur(p, frontier.front());
        frontier.pop_front();
        if (gens & kComplement) push(complement(cur, 2));
        if (gens & kRotation) push(rotate(cur, 1));
        if (gens & kSwaps)
            for (int g = 0; g < 6; ++g) push(swap_classes(cur, static_cast<Swap>(g)));
        if (gens & kDilatation)
            for (int r = 2; r < p.t; ++r)
                if (std::gcd(r, p.t) == 1) push(dilate(cur, r));
    }
    return seen;
}

} // namespace

OrbitFactors factorize_orbit(const CoboundarySet& member, long long total_size) {
    OrbitFactors f;
    f.complement = static_cast<long long>(closure(member, kComplement).size());
    f.rotation = static_cast<long long>(closure(member, kRotation).size());
    f.swaps = static_cast<long long>(closure(member, kSwaps).size());
    const long long cts =
        static_cast<long long>(closure(member, kComplement | kRotation | kSwaps).size());
    if (cts > 0 && total_size % cts == 0) {
        f.dilatation = total_size / cts;
        f.product_matches = f.complement * f.rotation * f.swaps == cts;
    } else {
        f.dilatation = 0;
        f.product_matches = false;
    }
    return f;
}

namespace {

// Ranking key for centered symmetric candidates: per diagram row, the mark
// count, the total cylinder distance of the marks from the central column,
// then the ascending distance list. Marks hug the axis as tightly as the row
// sum allows; this ranking pins down the published representatives uniquely
// (a key determines the diagram, since symmetric rows are mirror-invariant).
std::vector<int> axis_distance_key(const CoboundarySet& s) {
    const Diagram d = to_diagram(s);
    const int t = s.t(), axis = (t + 1) / 2;
    std::vector<int> key;
    for (int row = 1; row <= 4; ++row) {
        std::vector<int> dist;
        int sum = 0;
        for (int col = 1; col <= t; ++col)
            if (d.mark(row, col)) {
                const int dd = std::min(std::abs(col - axis), t - std::abs(col - axis));
                dist.push_back(dd);
                sum += dd;
            }
        std::sort(dist.begin(), dist.end());
        key.push_back(static_cast<int>(dist.size()));
        key.push_back(sum);
        key.insert(key.end(), dist.begin(), dist.end());
    }
    return key;
}

} // namespace

CoboundarySet representative(const OrbitRecord& rec) {
    const GroupParams p = rec.representative.params();
    const int central = (p.t + 1) / 2;

    // Pass 1: global minimum coboundary count over all expressions.
    int best_count = p.order() + 1;
    for (const auto& key : rec.members)
        for (const auto& e : eight_expressions(CoboundarySet(p, key)))
            best_count = std::min(best_count, e.count());

    std::vector<CoboundarySet> pool;
    for (const auto& key : rec.members) {
        for (auto& e : eight_expressions(CoboundarySet(p, key))) {
            if (e.count() != best_count) continue;
            if (rec.symmetric) {
                const auto cls = e.classes();
                // diagram rows 1..4 hold classes 2,3,4,1
                const size_t counts[4] = {cls[1].size(), cls[2].size(), cls[3].size(),
                                          cls[0].size()};
                if (!(counts[0] <= counts[1] && counts[1] <= counts[2] && counts[2] <= counts[3]))
                    continue;
                const auto axes = symmetry_axes(to_diagram(e));
                if (std::find(axes.begin(), axes.end(), central) == axes.end()) continue;
            }
            pool.push_back(std::move(e));
        }
    }

    const CoboundarySet* chosen = nullptr;
    if (rec.symmetric) {
        std::vector<int> best_key;
        for (const auto& e : pool) {
            auto k = axis_distance_key(e);
            if (!chosen || k < best_key || (k == best_key && e < *chosen)) {
                chosen = &e;
                best_key = std::move(k);
            }
        }
    } else {
        for (const auto& e : pool)
            if (!chosen || e < *chosen) chosen = &e;
    }
    return chosen ? *chosen : rec.representative;
}

OrbitRecord total_orbit(const CoboundarySet& s) {
    OrbitRecord rec{canonical_key(s), {}, 0, {}, false};
    KeySet keys = closure(s, kComplement | kRotation | kSwaps | kDilatation);
    rec.members.assign(keys.begin(), keys.end());
    std::sort(rec.members.begin(), rec.members.end());
    rec.size = static_cast<long long>(rec.members.size());
    rec.symmetric = !symmetry_axes(to_diagram(s)).empty();
    rec.factors = factorize_orbit(s, rec.size);
    rec.representative = representative(rec);
    return rec;
}

} // namespace hadz
