#pragma once

#include <string>
#include <vector>

#include "tcrit/census.hpp"

namespace tcrit {

/// Outcome of a verification pipeline: per-check lines plus an overall flag.
/// Failing checks carry their counterexample in the line text.
struct VerifyReport {
    std::string suite;
    bool ok = true;
    std::vector<std::string> lines;

    void check(bool cond, const std::string& what);
    void note(const std::string& what);
};

/// Characterization of the tournaments with exactly one non-critical vertex
/// at order 2n+1 (CLI suite "thm13"): every constructed member has k = 1 with
/// non-critical vertex 2k+1, members are pairwise non-isomorphic, the count
/// is 6(n-2) = 3(2n+1) - 15, and for order 7 the census k = 1 classes
/// coincide class-for-class with the members.
VerifyReport verify_minus_one_characterization(int n, const CensusOptions& opts = {});

/// Characterization of the critical tournaments (CLI suite "prop11"):
/// T/U/V members have k = 0 and are pairwise non-isomorphic; at order 5 the
/// census k = 0 classes are exactly these three; at order 7 the observed
/// census class count is reported.
VerifyReport verify_critical_characterization(int n, const CensusOptions& opts = {});

/// Indecomposability-graph shapes of the six families (CLI suite "remark45"):
/// the graph equals the expected edit of the path on 2n+1 vertices
/// edge-for-edge, duals have the same graph, and isolated-vertex counts are
/// 0 (E, F), 1 (G), 2 (H).
VerifyReport verify_indecomposability_graphs(int n);

/// Structural properties of the graph on every family member (CLI suite
/// "lemmas"): critical vertices have degree <= 2 with the associated interval
/// of the one-vertex-deleted tournament; the non-critical vertex has degree
/// exactly 2; there is a unique component of size >= 2 and it is a path.
VerifyReport verify_structural_lemmas(int n);

}  // namespace tcrit
