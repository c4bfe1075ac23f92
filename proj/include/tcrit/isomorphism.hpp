#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tcrit/permutation.hpp"
#include "tcrit/tournament.hpp"

namespace tcrit {

/// Total-order key identifying an isomorphism class at fixed order:
/// byte 0 is the order n, followed by the lexicographically minimal row-major
/// dominance matrix over all relabelings, packed row by row MSB-first
/// (column 0 of a row is the highest bit of its first byte).
using CanonicalForm = std::string;

std::string to_hex(const CanonicalForm& key);

/// A permutation p with t1.relabeled(p) == t2, or nullopt. Orders must match
/// (immediate nullopt otherwise). Backtracking pruned by out-degree counts
/// and iterated neighborhood-degree refinement; any returned witness is
/// verified by transport equality before being handed out.
std::optional<Permutation> find_isomorphism(const Tournament& t1, const Tournament& t2);

/// Minimal row-major matrix over all relabelings, computed by ordered-
/// partition refinement (breadth-first over the tied prefixes, so the greedy
/// row-by-row minimum is the global lexicographic minimum). Exact; capped at
/// n <= 12 (TooLarge beyond).
CanonicalForm canonical_form(const Tournament& t);

struct IsoClass {
    CanonicalForm key;
    std::size_t count = 0;
    Tournament representative;  // first member seen in input order
};

/// Groups tournaments of equal order into isomorphism classes, sorted by
/// canonical key. All inputs must have the same order.
std::vector<IsoClass> group_classes(const std::vector<Tournament>& ts);

}  // namespace tcrit
