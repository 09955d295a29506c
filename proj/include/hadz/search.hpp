#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hadz/coboundary_set.hpp"
#include "hadz/orbit.hpp"

namespace hadz {

enum class SearchMode { Full, SymmetricOnly };
enum class Repartition { All, MinimalOnly };

inline constexpr std::uint64_t kDefaultBudget = 1ull << 36;

struct SearchConfig {
    int t = 3;
    SearchMode mode = SearchMode::Full;
    Repartition repartition = Repartition::All;
    int jobs = 1;
    std::uint64_t budget = kDefaultBudget;
};

struct SearchReport {
    int t = 0;
    SearchMode mode = SearchMode::Full;
    Repartition repartition = Repartition::All;
    unsigned long long tested = 0;
    unsigned long long hadamard_total = 0; // distinct matrices
    // Full mode: the Hadamard basis subsets, ascending (each matrix has
    // exactly one basis expression). SymmetricOnly mode: canonical keys,
    // deduplicated across expressions and axes. Always sorted.
    std::vector<CoboundarySet> hits;
    // Filled by expand_from_representatives (one record per seed orbit).
    std::vector<OrbitRecord> orbits;
    double wall_seconds = 0.0;
};

// Full mode enumerates all 2^(4t-3) basis subsets (indices 2..4t-2, bit b of
// the candidate integer <-> index b+2, work split by fixed high-bit
// prefixes). SymmetricOnly enumerates (axis column, half-pattern) pairs so
// asymmetric sets are never generated. Throws InfeasibleScaleError when the
// enumeration would exceed cfg.budget.
SearchReport exhaustive_search(const SearchConfig& cfg);

// Partition Hadamard sets into total orbits. Output sorted by (size,
// representative).
std::vector<OrbitRecord> orbit_decompose(const std::vector<CoboundarySet>& sets);

// Census as a union of total orbits grown from verified seeds; every
// generated member is re-verified. Throws NotHadamardSeedError if a seed
// fails verification.
SearchReport expand_from_representatives(const std::vector<CoboundarySet>& reps);

enum class Strategy { FullSearch, SymmetricSearch, OrbitExpansion };

struct TableRow {
    int t = 0;
    Strategy strategy = Strategy::FullSearch;
    long long computed = 0;
    long long expected = 0;
    bool pass = false;
    std::vector<long long> orbit_sizes; // descending
    std::string note;
};

struct TableReport {
    std::vector<TableRow> rows;
    bool all_pass = true;
};

// Reproduces the census rows for odd t in [t_min, t_max]: full search for
// t <= 7, symmetric search for 9 <= t <= 13, orbit expansion from the built-in
// catalog for 15 <= t <= 23.
TableReport reproduce_tables(int t_min, int t_max, int jobs, std::uint64_t budget = kDefaultBudget);

const char* strategy_name(Strategy s);

} // namespace hadz
