#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tcrit/tournament.hpp"

namespace tcrit {

/// Undirected graph on a tournament's vertices with an edge {x,y} whenever
/// deleting both vertices leaves an indecomposable tournament.
struct IndecomposabilityGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;  // symmetric bit rows

    bool has_edge(int x, int y) const { return (adj[static_cast<std::size_t>(x)] >> y) & 1; }
    int degree(int v) const;
    VertexSet neighbors(int v) const;
    std::vector<std::pair<int, int>> edge_list() const;  // sorted pairs x < y

    friend bool operator==(const IndecomposabilityGraph&, const IndecomposabilityGraph&) = default;
};

enum class ComponentShape { isolated, path, cycle, other };

const char* shape_name(ComponentShape s);

struct Component {
    VertexSet vertices;
    ComponentShape shape;

    friend bool operator==(const Component&, const Component&) = default;
};

/// Vertices x with T - x decomposable. Defined for indecomposable T only
/// (NotIndecomposable otherwise).
VertexSet critical_vertices(const Tournament& t);

IndecomposabilityGraph indecomposability_graph(const Tournament& t);

/// Connected components ordered by smallest member, each tagged
/// isolated / path / cycle / other.
std::vector<Component> component_shapes(const IndecomposabilityGraph& g);

struct CriticalityReport {
    int order = 0;
    VertexSet critical;
    VertexSet non_critical;
    int non_critical_count = 0;  // the k of (-k)-criticality
    /// Orders below 5 are classified mechanically from the conventions; the
    /// usual notions of critical / (-k)-critical tournaments start at order 5.
    bool small_order = false;
    IndecomposabilityGraph graph;
    std::vector<Component> components;
};

/// Full criticality report for an indecomposable tournament.
CriticalityReport classify(const Tournament& t);

/// Graphviz export of the undirected graph; vertices of `tagged` are drawn
/// filled (used to mark non-critical vertices).
std::string to_dot(const IndecomposabilityGraph& g, VertexSet tagged = {});

}  // namespace tcrit
