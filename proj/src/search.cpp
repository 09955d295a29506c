#include "hadz/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>
#include <unordered_set>

#include "hadz/cocycle.hpp"
#include "hadz/diagram.hpp"
#include "hadz/errors.hpp"
#include "hadz/hadamard.hpp"
#include "hadz/tables.hpp"

namespace hadz {

namespace {

struct BitFlip {
    uint8_t plane;
    uint64_t mask;
};

// Gray-code walk over the low `bits` bits on top of a fixed prefix pattern.
// flips[b] tells which plane bits toggle when pattern bit b changes. visit()
// is called once per candidate with the current planes.
template <typename Visit>
void gray_walk(PlaneSet planes, int bits, const std::vector<BitFlip>& flips, Visit&& visit) {
    visit(planes);
    if (bits <= 0) return;
    const uint64_t total = 1ull << bits;
    for (uint64_t u = 1; u < total; ++u) {
        const int b = std::countr_zero(u);
        planes.p[flips[static_cast<size_t>(b)].plane] ^= flips[static_cast<size_t>(b)].mask;
        visit(planes);
    }
}

// Deterministic parallel run over work items 0..count-1; merge happens in
// item order regardless of scheduling.
template <typename Work>
void run_items(uint64_t count, int jobs, Work&& work) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (uint64_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<uint64_t> next{0};
    auto body = [&] {
        for (;;) {
            const uint64_t i = next.fetch_add(1);
            if (i >= count) return;
            work(i);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
}

std::vector<CoboundarySet> full_search_hits(const SearchConfig& cfg, unsigned long long& tested) {
    const GroupParams p(cfg.t);
    const int bits = 4 * cfg.t - 3;
    if (bits > 62 || (1ull << bits) > cfg.budget)
        throw InfeasibleScaleError("full enumeration needs 2^" + std::to_string(bits) +
                                   " candidates, over the configured budget");

    // Basis subsets: bit b <-> coboundary index b + 2.
    std::vector<BitFlip> flips(static_cast<size_t>(bits));
    for (int b = 0; b < bits; ++b) {
        const int k = b + 2;
        flips[static_cast<size_t>(b)] = {static_cast<uint8_t>((k - 1) & 3),
                                         1ull << ((k - 1) / 4)};
    }

    const int suffix_bits = std::min(bits, 18);
    const int prefix_bits = bits - suffix_bits;
    const uint64_t shards = 1ull << prefix_bits;
    const RowTester tester(p);

    std::vector<std::vector<CoboundarySet>> shard_hits(shards);
    run_items(shards, cfg.jobs, [&](uint64_t shard) {
        PlaneSet base;
        for (int b = 0; b < prefix_bits; ++b)
            if ((shard >> b) & 1) {
                const auto& f = flips[static_cast<size_t>(suffix_bits + b)];
                base.p[f.plane] ^= f.mask;
            }
        auto& out = shard_hits[shard];
        gray_walk(base, suffix_bits, flips, [&](const PlaneSet& ps) {
            if (tester.passes(ps)) out.push_back(set_of_planes(ps, p));
        });
    });

    tested = 1ull << bits;
    std::vector<CoboundarySet> hits;
    for (auto& sh : shard_hits)
        for (auto& h : sh) hits.push_back(std::move(h));
    std::sort(hits.begin(), hits.end());
    return hits;
}

std::vector<CoboundarySet> symmetric_search_hits(const SearchConfig& cfg,
                                                 unsigned long long& tested) {
    const GroupParams p(cfg.t);
    const int t = cfg.t;
    const int bits = 2 * t + 2; // 4 axis cells + 4 (t-1)/2 mirror pairs
    if (bits > 62 || static_cast<uint64_t>(t) * (1ull << bits) > cfg.budget)
        throw InfeasibleScaleError("symmetric enumeration needs " + std::to_string(t) + " * 2^" +
                                   std::to_string(bits) + " candidates, over the configured budget");

    const int suffix_bits = std::min(bits, 18);
    const int prefix_bits = bits - suffix_bits;
    const uint64_t shards_per_axis = 1ull << prefix_bits;
    const uint64_t items = static_cast<uint64_t>(t) * shards_per_axis;
    const RowTester tester(p);

    // plane of diagram row i (classes 2,3,4,1)
    static constexpr uint8_t kRowPlane[4] = {1, 2, 3, 0};
    auto cell_bit = [t](int col) { // col wraps into 1..t; plane bit is q = t - col
        const int c = ((col - 1) % t + t) % t + 1;
        return 1ull << (t - c);
    };

    std::vector<std::vector<CoboundarySet>> item_hits(items);
    run_items(items, cfg.jobs, [&](uint64_t item) {
        const int axis = static_cast<int>(item / shards_per_axis) + 1;
        const uint64_t shard = item % shards_per_axis;

        std::vector<BitFlip> flips(static_cast<size_t>(bits));
        for (int row = 0; row < 4; ++row)
            flips[static_cast<size_t>(row)] = {kRowPlane[row], cell_bit(axis)};
        for (int d = 1; d <= (t - 1) / 2; ++d)
            for (int row = 0; row < 4; ++row)
                flips[static_cast<size_t>(4 * d + row)] = {
                    kRowPlane[row], cell_bit(axis + d) | cell_bit(axis - d)};

        PlaneSet base;
        for (int b = 0; b < prefix_bits; ++b)
            if ((shard >> b) & 1) {
                const auto& f = flips[static_cast<size_t>(suffix_bits + b)];
                base.p[f.plane] ^= f.mask;
            }
        auto& out = item_hits[item];
        gray_walk(base, suffix_bits, flips, [&](const PlaneSet& ps) {
            if (tester.passes(ps)) out.push_back(set_of_planes(ps, p));
        });
    });

    tested = items << suffix_bits;
    std::vector<CoboundarySet> raw;
    for (auto& ih : item_hits)
        for (auto& h : ih) raw.push_back(std::move(h));

    // Dedup matrices across expressions and axes.
    std::vector<CoboundarySet> keys;
    keys.reserve(raw.size());
    for (const auto& h : raw) keys.push_back(canonical_key(h));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

} // namespace

SearchReport exhaustive_search(const SearchConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport rep;
    rep.t = cfg.t;
    rep.mode = cfg.mode;
    rep.repartition = cfg.repartition;

    rep.hits = cfg.mode == SearchMode::Full ? full_search_hits(cfg, rep.tested)
                                            : symmetric_search_hits(cfg, rep.tested);
    if (cfg.repartition == Repartition::MinimalOnly) {
        std::erase_if(rep.hits,
                      [](const CoboundarySet& s) { return !(minimal_repartition(s) == s); });
    }
    rep.hadamard_total = rep.hits.size();
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<OrbitRecord> orbit_decompose(const std::vector<CoboundarySet>& sets) {
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
    std::unordered_set<std::vector<int>, VecHash> assigned;
    std::vector<OrbitRecord> orbits;
    for (const auto& s : sets) {
        if (assigned.count(canonical_key(s).indices())) continue;
        OrbitRecord rec = total_orbit(s);
        for (const auto& m : rec.members) assigned.insert(m);
        orbits.push_back(std::move(rec));
    }
    std::sort(orbits.begin(), orbits.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.representative < b.representative;
    });
    return orbits;
}

SearchReport expand_from_representatives(const std::vector<CoboundarySet>& reps) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport rep;
    if (reps.empty()) return rep;
    rep.t = reps.front().t();
    rep.mode = SearchMode::SymmetricOnly;

    const GroupParams p(rep.t);
    const RowTester tester(p);
    std::vector<CoboundarySet> members;
    for (const auto& seed : reps) {
        if (seed.t() != rep.t) throw NotHadamardSeedError("seeds mix different t values");
        if (!is_hadamard(assemble(seed)))
            throw NotHadamardSeedError("seed does not assemble to a Hadamard matrix");
        OrbitRecord orb = total_orbit(seed);
        rep.tested += static_cast<unsigned long long>(orb.size);
        for (const auto& key : orb.members) {
            CoboundarySet m(p, key);
            if (!tester.passes(planes_of(m)))
                throw Error("orbit member failed Hadamard re-verification");
            members.push_back(std::move(m));
        }
        rep.orbits.push_back(std::move(orb));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    rep.hits = std::move(members);
    rep.hadamard_total = rep.hits.size();
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

const char* strategy_name(Strategy s) {
    switch (s) {
    case Strategy::FullSearch: return "full census";
    case Strategy::SymmetricSearch: return "symmetric census";
    case Strategy::OrbitExpansion: return "orbit expansion";
    }
    return "?";
}

TableReport reproduce_tables(int t_min, int t_max, int jobs, std::uint64_t budget) {
    TableReport report;
    for (int t = std::max(3, t_min | 1); t <= t_max; t += 2) {
        if (expected_census(t) < 0) continue;
        TableRow row;
        row.t = t;
        row.expected = expected_census(t);

        std::vector<OrbitRecord> orbits;
        if (t <= 13) {
            SearchConfig cfg;
            cfg.t = t;
            cfg.mode = t <= 7 ? SearchMode::Full : SearchMode::SymmetricOnly;
            cfg.jobs = jobs;
            cfg.budget = budget;
            row.strategy = t <= 7 ? Strategy::FullSearch : Strategy::SymmetricSearch;
            SearchReport sr = exhaustive_search(cfg);
            row.computed = static_cast<long long>(sr.hadamard_total);
            orbits = orbit_decompose(sr.hits);
        } else {
            row.strategy = Strategy::OrbitExpansion;
            std::vector<CoboundarySet> seeds;
            std::string notes;
            for (const auto& cat : catalog_orbits_for(t)) {
                seeds.push_back(cat.set());
                if (cat.note) notes += std::string(notes.empty() ? "" : "; ") + cat.note;
            }
            SearchReport sr = expand_from_representatives(seeds);
            row.computed = static_cast<long long>(sr.hadamard_total);
            orbits = std::move(sr.orbits);
            row.note = notes;
        }
        for (const auto& o : orbits) row.orbit_sizes.push_back(o.size);
        std::sort(row.orbit_sizes.rbegin(), row.orbit_sizes.rend());
        row.pass = row.computed == row.expected;
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace hadz
