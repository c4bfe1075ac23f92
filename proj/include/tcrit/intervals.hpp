#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tcrit/tournament.hpp"

namespace tcrit {

/// Couples (x,y), (u,v) of distinct vertices are equivalent when they are
/// equal, both arcs, or both non-arcs. Throws DegeneratePair when x == y or
/// u == v.
bool arcs_equivalent(const Tournament& t, std::pair<int, int> a, std::pair<int, int> b);

/// X is an interval when every vertex outside X relates the same way to all
/// of X. The empty set, singletons, and the whole vertex set are always
/// intervals.
bool is_interval(const Tournament& t, VertexSet x);

/// Interval test inside the subtournament on `universe`, without relabeling:
/// only vertices of universe - x are required to be uniform on x.
bool is_interval_within(const Tournament& t, VertexSet universe, VertexSet x);

/// Smallest interval containing `seed` (|seed| >= 2): repeatedly absorb any
/// outside vertex that distinguishes two current members. Any interval
/// containing the seed must contain every such vertex, so the fixpoint is the
/// minimum.
VertexSet interval_closure(const Tournament& t, VertexSet seed);
VertexSet interval_closure_within(const Tournament& t, VertexSet universe, VertexSet seed);

/// Some interval X with 2 <= |X| <= n-1, or nullopt if all intervals are
/// trivial. Deterministic: returns the closure of the lexicographically
/// smallest vertex pair whose closure is proper.
std::optional<VertexSet> find_nontrivial_interval(const Tournament& t);
std::optional<VertexSet> find_nontrivial_interval_within(const Tournament& t, VertexSet universe);

/// All intervals trivial. Orders <= 2 are indecomposable by convention
/// (every subset is trivial).
bool is_indecomposable(const Tournament& t);
bool is_indecomposable_within(const Tournament& t, VertexSet universe);

/// Exhaustive subset scan; testing oracle only. Throws TooLarge for n > 20.
/// Result is sorted by bit pattern and includes the trivial intervals.
std::vector<VertexSet> enumerate_intervals(const Tournament& t);

}  // namespace tcrit
