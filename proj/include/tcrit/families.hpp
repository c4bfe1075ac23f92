#pragma once

#include <string>
#include <vector>

#include "tcrit/permutation.hpp"
#include "tcrit/tournament.hpp"

namespace tcrit {

/// Family tags. L is the transitive chain; T, U, V are the critical families
/// of order 2n+1; E, F, G, H (plus the duals Fdual, Gdual) are the families
/// with a single non-critical vertex, of order 2n+1 with offset parameter k.
enum class Family { L, T, U, V, E, F, Fdual, G, Gdual, H };

const char* family_name(Family f);
Family parse_family(const std::string& name);  // BadParams on unknown tag
bool family_takes_offset(Family f);            // true for E/F/Fdual/G/Gdual/H

/// Transitive chain 0 < 1 < ... < m-1 (m >= 1).
Tournament chain(int m);

/// Circulant tournament on {0..2n}: arc i -> j when j - i falls in {1..n}
/// mod 2n+1 (n >= 1).
Tournament t_tournament(int n);

/// Chain 0 < ... < 2n with the arcs between even vertices reversed (n >= 1).
Tournament u_tournament(int n);

/// Chain 0 < ... < 2n-1 plus a vertex 2n dominating exactly the even chain
/// vertices (n >= 1).
Tournament v_tournament(int n);

// The four base families of order 2n+1 with parameters n >= 3 and
// 1 <= k <= n-2 (BadParams otherwise). Vertex 2k+1 separates an in-side
// {0..2k} from an out-side {2k+2..2n}:
//   E: both sides are chains; cross arcs out->in exactly between even pairs.
//   F: in-side carries the U pattern; cross rule as in E.
//   G: in-side carries the U pattern; the out-side is a copy of V with chain
//      2k+2 < ... < 2n-1 and distinguished vertex 2n; the only cross arcs
//      out->in run from 2n to the even in-side vertices.
//   H: in-side carries the V pattern (distinguished vertex 2k); out-side as
//      in G; the single cross arc out->in is (2n, 2k).
// All remaining cross pairs are oriented in->out.
Tournament e_tournament(int n, int k);
Tournament f_tournament(int n, int k);
Tournament g_tournament(int n, int k);
Tournament h_tournament(int n, int k);

/// Uniform constructor covering every tag; `k` is ignored for L/T/U/V.
Tournament make_family(Family f, int n, int k = 0);

/// Explicit permutation carrying dual(member(n, k)) onto member(n, n-k-1),
/// available for the E and H families:
///   E: q -> 2n - q;
///   H: q -> 2n - q - 1, except 2n -> 2(n-k-1), 2k -> 2n, 2k+1 -> 2(n-k-1)+1.
Permutation dual_isomorphism(Family f, int n, int k);

struct FamilyMember {
    Family family;
    int n = 0;
    int k = 0;
    Tournament tournament;

    std::string name() const;  // e.g. "E(4,2)", "Fdual(3,1)"
};

/// The 6(n-2) tournaments with one non-critical vertex at order 2n+1,
/// in deterministic order: k ascending, then E, F, Fdual, G, Gdual, H.
std::vector<FamilyMember> minus_one_critical_members(int n);

}  // namespace tcrit
