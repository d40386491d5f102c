#pragma once

#include <string>
#include <vector>

#include "mvv/rational.hpp"

namespace mvv {

// Undirected multigraph with genus decorations. mult is a symmetric
// vertex-by-vertex matrix; the diagonal counts loops (a loop adds 2 to the
// valence of its vertex).
struct GraphShape {
    std::vector<int> genus;
    std::vector<std::vector<int>> mult;

    int vertex_count() const { return static_cast<int>(genus.size()); }
    int edge_count() const;
    int edge_slots(int v) const;  // half-edges from edges at v (loops twice)
    bool connected() const;
};

struct Edge {
    int u, v;  // u <= v; loops have u == v
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Edges in canonical order (by (u,v), multiplicity expanded).
std::vector<Edge> edge_list(const GraphShape& shape);

// Stable graph with legs labeled 1..n. Vertices are unlabeled (the numbering
// is a chosen representative); legs are the fixed points of the half-edge
// involution and are pinned by automorphisms.
struct StableGraph {
    GraphShape shape;
    std::vector<std::vector<int>> legs;  // sorted labels per vertex
    int genus = 0;
    int num_legs = 0;

    int vertex_count() const { return shape.vertex_count(); }
    int num_edges() const { return shape.edge_count(); }
    std::vector<Edge> edges() const { return edge_list(shape); }
    int valence(int v) const {
        return shape.edge_slots(v) + static_cast<int>(legs[v].size());
    }
};

// Same combinatorics with legs collapsed to per-vertex multiplicities.
// For any quantity F(Gamma) that does not depend on which leg labels sit
// where, summing F/|Aut| over labeled isomorphism classes equals summing
//   n!/(prod_v p_v!) * F/|Aut*|
// over these classes, where Aut* may permute vertices regardless of labels.
struct LegCountedGraph {
    GraphShape shape;
    std::vector<int> leg_count;
    int genus = 0;
    int num_legs = 0;

    int vertex_count() const { return shape.vertex_count(); }
    int num_edges() const { return shape.edge_count(); }
    std::vector<Edge> edges() const { return edge_list(shape); }
    int valence(int v) const { return shape.edge_slots(v) + leg_count[v]; }

    // n! / prod_v p_v!  (number of leg labelings per Aut*-orbit weight)
    Rational labeling_multiplicity() const;
};

// Explicit (V, H, iota, alpha, g, L) view used by tests and DOT export.
struct HalfEdgeView {
    int num_vertices = 0;
    std::vector<int> involution;    // iota; fixed points are legs
    std::vector<int> attach;        // alpha: half-edge -> vertex
    std::vector<int> leg_label;     // label for legs, 0 otherwise
    std::vector<int> vertex_genus;  // g_v
};
HalfEdgeView to_half_edges(const StableGraph& G);

// All isomorphism classes in deterministic order (sorted by edge count,
// then canonical encoding). The edgeless graph is listed only for the
// boundary pairs 2g+n == 3 ((0,3) and (1,1)), matching the counts the
// tables give; it contributes zero everywhere else.
std::vector<StableGraph> enumerate_stable_graphs(int g, int n);

// Leg-collapsed classes (never includes the edgeless graph); this is the
// enumeration the volume and Siegel-Veech sums run on.
std::vector<LegCountedGraph> enumerate_leg_counted_graphs(int g, int n);

// |Aut|: pairs (vertex map, half-edge map) commuting with the involution,
// preserving genus and leg labels. Loop flips and parallel-edge swaps count.
Integer aut_order(const StableGraph& G);
// Same but legs only constrain multiplicities (vertex maps may move labels).
Integer aut_order(const LegCountedGraph& G);

// True iff removing one copy of e disconnects the graph; loops never are.
bool is_bridge(const GraphShape& shape, Edge e);

// Equal encodings <=> isomorphic graphs (used as the dedup/sort key).
std::string canonical_encoding(const StableGraph& G);
std::string canonical_encoding(const LegCountedGraph& G);

std::string to_dot(const StableGraph& G);

}  // namespace mvv
