#include "tcrit/families.hpp"

#include <set>

#include "doctest.h"
#include "tcrit/criticality.hpp"
#include "tcrit/intervals.hpp"
#include "tcrit/isomorphism.hpp"

using namespace tcrit;

TEST_CASE("chains") {
    CHECK(chain(3) == Tournament::from_arcs(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(chain(1).order() == 1);
    for (int m = 3; m <= 6; ++m) CHECK_FALSE(is_indecomposable(chain(m)));
    CHECK_THROWS_AS(chain(0), BadParams);
}

TEST_CASE("the three critical families") {
    const Tournament t3 = Tournament::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(t_tournament(1) == t3);
    CHECK(u_tournament(1) == t3);
    CHECK(v_tournament(1) == t3);

    CHECK(t_tournament(2).out_set(0) == VertexSet::of({1, 2}));

    // U(2): arcs between even vertices point downward
    const Tournament u5 = u_tournament(2);
    CHECK(u5.arc(2, 0));
    CHECK(u5.arc(4, 0));
    CHECK(u5.arc(4, 2));
    CHECK(u5.arc(0, 1));

    const Tournament v5 = v_tournament(2);
    CHECK(v5.out_set(4) == VertexSet::of({0, 2}));
    CHECK(v5.in_set(4) == VertexSet::of({1, 3}));

    for (int n = 2; n <= 4; ++n) {
        CHECK(classify(t_tournament(n)).non_critical_count == 0);
        CHECK(classify(u_tournament(n)).non_critical_count == 0);
        CHECK(classify(v_tournament(n)).non_critical_count == 0);
    }
    CHECK_THROWS_AS(t_tournament(0), BadParams);
}

TEST_CASE("E family structure") {
    const Tournament e = e_tournament(3, 1);
    // cross arcs out->in are exactly the even pairs
    for (int x : {4, 5, 6})
        for (int y : {0, 1, 2})
            CHECK(e.arc(x, y) == (x % 2 == 0 && y % 2 == 0));
    // both sides are chains
    CHECK(e.induced(VertexSet::of({0, 1, 2})) == chain(3));
    CHECK(e.induced(VertexSet::of({4, 5, 6})) == chain(3));
    // the separating vertex
    CHECK(e.in_set(3) == VertexSet::of({0, 1, 2}));
    CHECK(e.out_set(3) == VertexSet::of({4, 5, 6}));

    const auto rep = classify(e);
    CHECK(rep.non_critical_count == 1);
    CHECK(rep.non_critical == VertexSet::single(3));
}

TEST_CASE("F family structure") {
    const Tournament f = f_tournament(3, 1);
    // in-side carries the U pattern: 2 -> 0 among the evens of {0,1,2}
    CHECK(f.arc(2, 0));
    CHECK(f.arc(0, 1));
    CHECK(f.arc(1, 2));
    CHECK(classify(f_tournament(4, 2)).non_critical == VertexSet::single(5));
    CHECK(find_isomorphism(f.induced(VertexSet::of({0, 1, 2})), u_tournament(1)).has_value());
}

TEST_CASE("G family structure") {
    const Tournament g = g_tournament(3, 1);
    // out-side is a 3-cycle: chain 4 < 5, then 6 -> 4 and 5 -> 6
    CHECK(g.arc(4, 5));
    CHECK(g.arc(6, 4));
    CHECK(g.arc(5, 6));
    // cross arcs out->in: only from the top vertex to the even in-side
    for (int x : {4, 5, 6})
        for (int y : {0, 1, 2})
            CHECK(g.arc(x, y) == (x == 6 && (y % 2 == 0)));

    const auto comps = component_shapes(indecomposability_graph(g));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].shape == ComponentShape::path);
    CHECK(comps[0].vertices.size() == 6);
    CHECK(comps[1].vertices == VertexSet::single(6));
}

TEST_CASE("H family structure") {
    const Tournament h = h_tournament(3, 1);
    int cross = 0;
    for (int x : {4, 5, 6})
        for (int y : {0, 1, 2})
            if (h.arc(x, y)) {
                ++cross;
                CHECK(x == 6);
                CHECK(y == 2);
            }
    CHECK(cross == 1);
    CHECK(classify(h).non_critical == VertexSet::single(3));
    CHECK(h.induced(VertexSet::of({0, 1, 2})) == t_tournament(1));  // the V pattern at k=1
}

TEST_CASE("side substructures for all parameters") {
    for (int n = 3; n <= 5; ++n) {
        for (int k = 1; k <= n - 2; ++k) {
            VertexSet ins, outs;
            for (int v = 0; v <= 2 * k; ++v) ins.add(v);
            for (int v = 2 * k + 2; v <= 2 * n; ++v) outs.add(v);
            CHECK(e_tournament(n, k).induced(ins) == chain(2 * k + 1));
            CHECK(e_tournament(n, k).induced(outs) == chain(2 * n - 2 * k - 1));
            CHECK(find_isomorphism(f_tournament(n, k).induced(ins), u_tournament(k)).has_value());
            CHECK(find_isomorphism(g_tournament(n, k).induced(outs), v_tournament(n - k - 1)).has_value());
            CHECK(find_isomorphism(h_tournament(n, k).induced(outs), v_tournament(n - k - 1)).has_value());
            CHECK(find_isomorphism(h_tournament(n, k).induced(ins), v_tournament(k)).has_value());
        }
    }
}

TEST_CASE("parameter guards") {
    CHECK_THROWS_AS(e_tournament(3, 5), BadParams);
    CHECK_THROWS_AS(e_tournament(3, 0), BadParams);
    CHECK_THROWS_AS(e_tournament(2, 1), BadParams);
    CHECK_THROWS_AS(h_tournament(4, 3), BadParams);
    CHECK_THROWS_AS(make_family(parse_family("E"), 3, 5), BadParams);
    CHECK_THROWS_AS(parse_family("Z"), BadParams);
    CHECK(parse_family("Gdual") == Family::Gdual);
    CHECK(family_takes_offset(Family::H));
    CHECK_FALSE(family_takes_offset(Family::V));
}

TEST_CASE("explicit dual isomorphisms") {
    CHECK(dual_isomorphism(Family::E, 3, 1) == Permutation({6, 5, 4, 3, 2, 1, 0}));

    // H(3,1): 2 -> 6, 3 -> 3, 6 -> 2, else q -> 5-q
    const Permutation sigma = dual_isomorphism(Family::H, 3, 1);
    CHECK(sigma(2) == 6);
    CHECK(sigma(3) == 3);
    CHECK(sigma(6) == 2);
    CHECK(sigma(0) == 5);
    CHECK(sigma(4) == 1);

    for (int n = 3; n <= 6; ++n) {
        for (int k = 1; k <= n - 2; ++k) {
            CHECK(e_tournament(n, k).dual().relabeled(dual_isomorphism(Family::E, n, k)) ==
                  e_tournament(n, n - k - 1));
            CHECK(h_tournament(n, k).dual().relabeled(dual_isomorphism(Family::H, n, k)) ==
                  h_tournament(n, n - k - 1));
        }
    }
    // self-dual parameter: k = n-k-1
    CHECK(e_tournament(3, 1).dual().relabeled(dual_isomorphism(Family::E, 3, 1)) == e_tournament(3, 1));
    CHECK_THROWS_AS(dual_isomorphism(Family::F, 3, 1), BadParams);
}

TEST_CASE("member list") {
    const auto m3 = minus_one_critical_members(3);
    CHECK(m3.size() == 6);
    const auto m4 = minus_one_critical_members(4);
    CHECK(m4.size() == 12);
    CHECK(m3[0].name() == "E(3,1)");
    CHECK(m3[2].name() == "Fdual(3,1)");
    CHECK(m3[2].tournament == f_tournament(3, 1).dual());

    // pairwise non-isomorphic via canonical keys
    for (const auto& members : {m3, m4}) {
        std::set<CanonicalForm> keys;
        for (const auto& m : members) keys.insert(canonical_form(m.tournament));
        CHECK(keys.size() == members.size());
    }
    CHECK_THROWS_AS(minus_one_critical_members(2), BadParams);
}

TEST_CASE("one-vertex deletions of members decompose except at the special vertex") {
    for (int n = 3; n <= 4; ++n) {
        for (int k = 1; k <= n - 2; ++k) {
            for (const Tournament& w : {e_tournament(n, k), f_tournament(n, k), g_tournament(n, k),
                                        h_tournament(n, k)}) {
                const int special = 2 * k + 1;
                for (int i = 0; i < w.order(); ++i) {
                    const bool indec = is_indecomposable_within(w, w.vertices().without(i));
                    CHECK(indec == (i == special));
                }
            }
        }
    }
}
