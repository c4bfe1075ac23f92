#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tcrit/isomorphism.hpp"
#include "tcrit/tournament.hpp"

namespace tcrit {

/// Labeled tournaments of order m are coded by the bits of the strict upper
/// triangle: pair p = 0, 1, ... runs over (0,1), (0,2), ..., (0,m-1), (1,2),
/// ... and bit p of the code set means arc i -> j for the p-th pair (i, j),
/// clear means j -> i. Codes run 0 .. 2^(m(m-1)/2) - 1.

std::uint64_t labeled_count(int m);  // 2^(m(m-1)/2)
Tournament tournament_from_code(int m, std::uint64_t code);

/// Visits every labeled tournament of order m exactly once, in ascending
/// code order. m <= 8 (TooLarge beyond).
void enumerate_labeled(int m, const std::function<void(std::uint64_t, const Tournament&)>& visit);

/// Same, restricted to codes in [lo, hi) — the sharding primitive.
void enumerate_labeled_range(int m, std::uint64_t lo, std::uint64_t hi,
                             const std::function<void(std::uint64_t, const Tournament&)>& visit);

struct CensusOptions {
    int jobs = 1;                 // shard count; results are identical for any value
    bool collect_classes = true;  // isomorphism classes per k (order <= 12 only)
};

struct CensusClass {
    int k = 0;
    CanonicalForm key;
    std::uint64_t labeled = 0;
    Tournament representative;  // smallest-code member
};

struct CensusResult {
    int order = 0;
    std::uint64_t labeled = 0;
    std::uint64_t indecomposable = 0;
    /// k -> number of labeled indecomposable tournaments with exactly k
    /// non-critical vertices. Masses sum to `indecomposable`. For order < 5
    /// the k values follow the small-order conventions.
    std::map<int, std::uint64_t> histogram;
    std::vector<CensusClass> classes;  // sorted by (k, key)
};

/// Exhaustive census over all labeled tournaments of order m (m <= 8;
/// the m = 8 run is a 2^28 sweep and is gated behind an explicit CLI flag).
CensusResult run_census(int m, const CensusOptions& opts = {});

/// Line-oriented text summary; one line per fact, deterministic.
std::string census_summary(const CensusResult& r);

/// Machine-readable document: one record per class with order, k, canonical
/// form hex and the representative's `.trn` payload.
std::string census_json(const CensusResult& r);

}  // namespace tcrit
