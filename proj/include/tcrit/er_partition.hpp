#pragma once

#include <map>
#include <utility>

#include "tcrit/tournament.hpp"

namespace tcrit {

/// Partition of the vertices outside X relative to an indecomposable
/// subtournament T(X):
///   - bracket: vertices uniform towards the whole of X,
///   - attached[u]: vertices x for which {u, x} is an interval of T(X + x),
///   - ext: vertices x for which T(X + x) is indecomposable.
/// Only nonempty attached classes are stored.
struct ErPartition {
    VertexSet bracket;
    VertexSet ext;
    std::map<int, VertexSet> attached;
};

/// Classifies each outside vertex by the three definitional tests
/// independently and then asserts that exactly one applies (the partition
/// property is a theorem; it is checked, not assumed). Requires |X| >= 3 and
/// T(X) indecomposable (PreconditionViolated otherwise).
ErPartition compute_partition(const Tournament& t, VertexSet x);

/// Two distinct outside vertices whose joint addition to X keeps the
/// subtournament indecomposable. Requires T indecomposable, |X| >= 3,
/// |S - X| >= 2 and T(X) indecomposable; under those hypotheses a pair always
/// exists, so exhaustion of the lexicographic pair scan throws (it would
/// disprove the guarantee). Returns the first pair in lexicographic order.
std::pair<int, int> find_indecomposable_extension_pair(const Tournament& t, VertexSet x);

}  // namespace tcrit
