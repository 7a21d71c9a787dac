#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treeweights/rational.hpp"

namespace treeweights {

// Unordered edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

std::string edge_to_string(const Edge& e);

namespace detail {

// Validated labeled tree shape shared by WeightedTree and Topology:
// connected, |E| = |V| - 1, at least one edge, every leaf labeled,
// labels exactly 1..n on distinct vertices.
class Shape {
public:
    Shape(std::vector<int> vertices, std::vector<Edge> edges,
          std::map<int, int> label_to_vertex);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::map<int, int>& labels() const { return label_to_vertex_; }

    int n_labels() const { return static_cast<int>(label_to_vertex_.size()); }
    bool has_vertex(int v) const;
    int degree(int v) const;
    bool is_leaf(int v) const { return degree(v) == 1; }
    const std::vector<int>& neighbors(int v) const;
    std::optional<int> label_of(int vertex) const;
    int vertex_of_label(int label) const;  // throws DomainError if unknown

    std::vector<int> leaves() const;
    int leaf_count() const;
    int leaf_label_count() const;
    int non_leaf_label_count() const;

    // Edges of the minimal subtree spanning the given vertices, as flags
    // aligned with edges(). A single vertex spans no edges.
    std::vector<char> span_edges(const std::vector<int>& target_vertices) const;

    // Label / leaf counts on the two sides of an edge, ordered (side of
    // e.u, side of e.v).
    std::pair<int, int> label_split(const Edge& e) const;
    std::pair<int, int> leaf_split(const Edge& e) const;

    // Canonical string, invariant under renaming of unlabeled vertices.
    // Edge annotations (weights) may be supplied per edge index.
    std::string canonical_string(const std::vector<std::string>* edge_tags) const;

    int edge_index(const Edge& e) const;  // throws DomainError if absent

private:
    std::vector<int> vertices_;
    std::vector<Edge> edges_;
    std::map<int, int> label_to_vertex_;
    std::map<int, std::vector<int>> adj_;
    std::map<int, int> vertex_to_label_;
    std::map<Edge, int> edge_index_;

    std::vector<int> centers() const;
    std::string encode_rooted(int root,
                              const std::vector<std::string>* edge_tags) const;
};

}  // namespace detail
}  // namespace treeweights
