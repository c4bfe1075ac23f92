#include "tcrit/criticality.hpp"

#include <bit>

#include "tcrit/intervals.hpp"

namespace tcrit {

int IndecomposabilityGraph::degree(int v) const {
    return std::popcount(adj[static_cast<std::size_t>(v)]);
}

VertexSet IndecomposabilityGraph::neighbors(int v) const {
    return VertexSet::from_bits(adj[static_cast<std::size_t>(v)]);
}

std::vector<std::pair<int, int>> IndecomposabilityGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (has_edge(x, y)) out.emplace_back(x, y);
    return out;
}

const char* shape_name(ComponentShape s) {
    switch (s) {
        case ComponentShape::isolated: return "isolated";
        case ComponentShape::path: return "path";
        case ComponentShape::cycle: return "cycle";
        case ComponentShape::other: return "other";
    }
    return "?";
}

VertexSet critical_vertices(const Tournament& t) {
    if (!is_indecomposable(t)) throw NotIndecomposable("criticality is defined for indecomposable tournaments");
    VertexSet crit;
    for (int v = 0; v < t.order(); ++v)
        if (!is_indecomposable_within(t, t.vertices().without(v))) crit.add(v);
    return crit;
}

IndecomposabilityGraph indecomposability_graph(const Tournament& t) {
    const int n = t.order();
    IndecomposabilityGraph g{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (is_indecomposable_within(t, t.vertices().without(x).without(y))) {
                g.adj[static_cast<std::size_t>(x)] |= std::uint64_t{1} << y;
                g.adj[static_cast<std::size_t>(y)] |= std::uint64_t{1} << x;
            }
    return g;
}

std::vector<Component> component_shapes(const IndecomposabilityGraph& g) {
    std::vector<Component> out;
    VertexSet seen;
    for (int v = 0; v < g.n; ++v) {
        if (seen.contains(v)) continue;
        // flood fill from v
        VertexSet comp = VertexSet::single(v);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int w : frontier) next = next | g.neighbors(w);
            frontier = next - comp;
            comp = comp | next;
        }
        seen = seen | comp;

        int deg1 = 0, deg2 = 0, edges2 = 0;  // edges2 = sum of degrees
        bool deg_over = false;
        for (int w : comp) {
            const int d = g.degree(w);
            edges2 += d;
            if (d == 1) ++deg1;
            else if (d == 2) ++deg2;
            else if (d > 2) deg_over = true;
        }
        const int size = comp.size();
        ComponentShape shape = ComponentShape::other;
        if (size == 1)
            shape = ComponentShape::isolated;
        else if (!deg_over && deg1 == 2 && deg2 == size - 2 && edges2 / 2 == size - 1)
            shape = ComponentShape::path;
        else if (!deg_over && deg2 == size && size >= 3)
            shape = ComponentShape::cycle;
        out.push_back(Component{comp, shape});
    }
    return out;
}

CriticalityReport classify(const Tournament& t) {
    CriticalityReport r;
    r.order = t.order();
    r.critical = critical_vertices(t);  // throws NotIndecomposable if needed
    r.non_critical = t.vertices() - r.critical;
    r.non_critical_count = r.non_critical.size();
    r.small_order = t.order() < 5;
    r.graph = indecomposability_graph(t);
    r.components = component_shapes(r.graph);
    return r;
}

std::string to_dot(const IndecomposabilityGraph& g, VertexSet tagged) {
    std::string out = "graph indecomposability {\n";
    for (int v = 0; v < g.n; ++v) {
        out += "  " + std::to_string(v);
        if (tagged.contains(v)) out += " [style=filled, fillcolor=gray]";
        out += ";\n";
    }
    for (auto [x, y] : g.edge_list())
        out += "  " + std::to_string(x) + " -- " + std::to_string(y) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace tcrit
