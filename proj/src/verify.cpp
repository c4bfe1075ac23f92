#include "tcrit/verify.hpp"

#include <algorithm>
#include <set>

#include "tcrit/criticality.hpp"
#include "tcrit/families.hpp"
#include "tcrit/intervals.hpp"
#include "tcrit/isomorphism.hpp"

namespace tcrit {

namespace {

std::string set_text(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

std::string edge_text(const std::vector<std::pair<int, int>>& edges) {
    std::string out;
    for (auto [x, y] : edges) out += "{" + std::to_string(x) + "," + std::to_string(y) + "} ";
    if (!out.empty()) out.pop_back();
    return out;
}

// Pairwise distinctness: canonical keys up to the canonical cap, pairwise
// witness search beyond it.
bool pairwise_distinct(const std::vector<FamilyMember>& members, std::string& detail) {
    const int order = members.front().tournament.order();
    if (order <= 12) {
        std::set<CanonicalForm> keys;
        for (const auto& m : members) keys.insert(canonical_form(m.tournament));
        if (keys.size() != members.size()) {
            detail = "canonical collision: " + std::to_string(keys.size()) + " classes for " +
                     std::to_string(members.size()) + " members";
            return false;
        }
        return true;
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            if (find_isomorphism(members[a].tournament, members[b].tournament)) {
                detail = members[a].name() + " isomorphic to " + members[b].name();
                return false;
            }
        }
    }
    return true;
}

}  // namespace

void VerifyReport::check(bool cond, const std::string& what) {
    lines.push_back(std::string(cond ? "ok: " : "FAIL: ") + what);
    ok = ok && cond;
}

void VerifyReport::note(const std::string& what) { lines.push_back("-- " + what); }

VerifyReport verify_minus_one_characterization(int n, const CensusOptions& opts) {
    VerifyReport r;
    r.suite = "thm13";
    r.note("order " + std::to_string(2 * n + 1) + " (n=" + std::to_string(n) + ")");
    const auto members = minus_one_critical_members(n);
    r.check(static_cast<int>(members.size()) == 6 * (n - 2) &&
                static_cast<int>(members.size()) == 3 * (2 * n + 1) - 15,
            "member count is 6(n-2) = 3m-15 = " + std::to_string(members.size()));

    for (const auto& m : members) {
        if (!is_indecomposable(m.tournament)) {
            r.check(false, m.name() + " indecomposable");
            continue;
        }
        const auto rep = classify(m.tournament);
        r.check(rep.non_critical_count == 1 && rep.non_critical == VertexSet::single(2 * m.k + 1),
                m.name() + " has exactly one non-critical vertex and it is " +
                    std::to_string(2 * m.k + 1) + " (got " + set_text(rep.non_critical) + ")");
    }

    std::string detail;
    const bool distinct = pairwise_distinct(members, detail);
    r.check(distinct, "members pairwise non-isomorphic" + (distinct ? "" : ": " + detail));

    if (2 * n + 1 <= 7) {
        const auto census = run_census(2 * n + 1, opts);
        std::set<CanonicalForm> census_keys;
        for (const auto& c : census.classes)
            if (c.k == 1) census_keys.insert(c.key);
        std::set<CanonicalForm> member_keys;
        for (const auto& m : members) member_keys.insert(canonical_form(m.tournament));
        r.check(census_keys == member_keys,
                "census k=1 classes coincide with the members (census " +
                    std::to_string(census_keys.size()) + ", members " +
                    std::to_string(member_keys.size()) + ")");
    }
    return r;
}

VerifyReport verify_critical_characterization(int n, const CensusOptions& opts) {
    VerifyReport r;
    r.suite = "prop11";
    if (n < 2) throw BadParams("critical tournaments need order >= 5 (n >= 2)");
    r.note("order " + std::to_string(2 * n + 1) + " (n=" + std::to_string(n) + ")");

    const std::vector<std::pair<const char*, Tournament>> members = {
        {"T", t_tournament(n)}, {"U", u_tournament(n)}, {"V", v_tournament(n)}};
    for (const auto& [name, t] : members) {
        if (!is_indecomposable(t)) {
            r.check(false, std::string(name) + " indecomposable");
            continue;
        }
        const auto rep = classify(t);
        r.check(rep.non_critical_count == 0,
                std::string(name) + " critical (all vertices critical), k=" +
                    std::to_string(rep.non_critical_count));
    }
    std::set<CanonicalForm> member_keys;
    bool distinct = true;
    if (2 * n + 1 <= 12) {
        for (const auto& [name, t] : members) member_keys.insert(canonical_form(t));
        distinct = member_keys.size() == 3;
    } else {
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (find_isomorphism(members[a].second, members[b].second)) distinct = false;
    }
    r.check(distinct, "T, U, V pairwise non-isomorphic");

    if (2 * n + 1 == 5) {
        const auto census = run_census(5, opts);
        bool only_k0 = true;
        for (const auto& [k, c] : census.histogram)
            if (k != 0 && c != 0) only_k0 = false;
        r.check(only_k0, "every indecomposable order-5 tournament is critical");
        std::set<CanonicalForm> census_keys;
        for (const auto& c : census.classes)
            if (c.k == 0) census_keys.insert(c.key);
        r.check(census_keys == member_keys, "census k=0 classes at order 5 are exactly {T, U, V}");
    }
    if (2 * n + 1 == 7) {
        const auto census = run_census(7, opts);
        std::size_t k0 = 0;
        std::set<CanonicalForm> census_keys;
        for (const auto& c : census.classes)
            if (c.k == 0) {
                ++k0;
                census_keys.insert(c.key);
            }
        r.note("observed k=0 classes at order 7: " + std::to_string(k0));
        r.check(std::includes(census_keys.begin(), census_keys.end(), member_keys.begin(),
                              member_keys.end()),
                "T, U, V appear among the census k=0 classes at order 7");
    }
    return r;
}

VerifyReport verify_indecomposability_graphs(int n) {
    VerifyReport r;
    r.suite = "remark45";
    if (n < 3) throw BadParams("families need n >= 3");
    r.note("order " + std::to_string(2 * n + 1) + " (n=" + std::to_string(n) + ")");

    for (int k = 1; k <= n - 2; ++k) {
        std::vector<std::pair<int, int>> path;
        for (int i = 0; i < 2 * n; ++i) path.emplace_back(i, i + 1);
        auto erase_edge = [](std::vector<std::pair<int, int>> es, std::pair<int, int> e) {
            es.erase(std::remove(es.begin(), es.end(), e), es.end());
            return es;
        };
        const auto g_edges = erase_edge(path, {2 * n - 1, 2 * n});
        auto h_edges = erase_edge(erase_edge(g_edges, {2 * k - 1, 2 * k}), {2 * k, 2 * k + 1});
        h_edges.emplace_back(2 * k - 1, 2 * k + 1);
        std::sort(h_edges.begin(), h_edges.end());

        const std::vector<std::tuple<Family, std::vector<std::pair<int, int>>, int>> expectations = {
            {Family::E, path, 0},   {Family::F, path, 0},      {Family::Fdual, path, 0},
            {Family::G, g_edges, 1}, {Family::Gdual, g_edges, 1}, {Family::H, h_edges, 2}};
        for (const auto& [fam, expect, isolated] : expectations) {
            const FamilyMember m{fam, n, k, make_family(fam, n, k)};
            const auto graph = indecomposability_graph(m.tournament);
            const auto edges = graph.edge_list();
            r.check(edges == expect, m.name() + " graph matches the expected path edit" +
                                         (edges == expect ? "" : " (got " + edge_text(edges) + ")"));
            r.check(graph == indecomposability_graph(m.tournament.dual()),
                    m.name() + " dual has the same graph");
            int iso_count = 0;
            for (const auto& comp : component_shapes(graph))
                if (comp.shape == ComponentShape::isolated) ++iso_count;
            r.check(iso_count == isolated, m.name() + " isolated vertices: " +
                                               std::to_string(iso_count) + " (expected " +
                                               std::to_string(isolated) + ")");
        }
    }
    return r;
}

VerifyReport verify_structural_lemmas(int n) {
    VerifyReport r;
    r.suite = "lemmas";
    if (n < 3) throw BadParams("families need n >= 3");
    r.note("order " + std::to_string(2 * n + 1) + " (n=" + std::to_string(n) + ")");

    for (const auto& m : minus_one_critical_members(n)) {
        const auto rep = classify(m.tournament);
        const auto& g = rep.graph;
        std::string fail;

        for (int x : rep.critical) {
            const int deg = g.degree(x);
            const VertexSet rest = m.tournament.vertices().without(x);
            if (deg > 2) {
                fail = "critical vertex " + std::to_string(x) + " has degree " + std::to_string(deg);
                break;
            }
            if (deg == 1) {
                const int y = g.neighbors(x).lowest();
                if (!is_interval_within(m.tournament, rest, rest.without(y))) {
                    fail = "S-{x,y} not an interval of T-x at x=" + std::to_string(x);
                    break;
                }
            } else if (deg == 2) {
                if (!is_interval_within(m.tournament, rest, g.neighbors(x))) {
                    fail = "neighbors of x not an interval of T-x at x=" + std::to_string(x);
                    break;
                }
            }
        }
        if (fail.empty() && rep.non_critical_count == 1) {
            const int a = rep.non_critical.lowest();
            if (g.degree(a) != 2)
                fail = "non-critical vertex has degree " + std::to_string(g.degree(a));
        }
        if (fail.empty()) {
            int big = 0;
            bool big_is_path = true;
            for (const auto& comp : rep.components) {
                if (comp.vertices.size() >= 2) {
                    ++big;
                    big_is_path = big_is_path && comp.shape == ComponentShape::path;
                }
            }
            if (big != 1)
                fail = std::to_string(big) + " components of size >= 2";
            else if (!big_is_path)
                fail = "the big component is not a path";
        }
        r.check(fail.empty(), m.name() + " degree/interval dichotomy, non-critical degree 2, unique path component" +
                                  (fail.empty() ? "" : " (" + fail + ")"));
    }
    return r;
}

}  // namespace tcrit
