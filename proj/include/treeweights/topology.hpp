#pragma once

#include <map>
#include <string>
#include <vector>

#include "treeweights/shape.hpp"
#include "treeweights/tree.hpp"

namespace treeweights {

// Unweighted reduced labeled tree: every leaf labeled, every degree-2
// vertex labeled. The non-twig edges (no leaf endpoint), in sorted order,
// are the moduli coordinates.
class Topology {
public:
    Topology(std::vector<int> vertices, std::vector<Edge> edges,
             std::map<int, int> label_to_vertex);

    static Topology of(const WeightedTree& tree);

    const std::vector<int>& vertices() const { return shape_.vertices(); }
    const std::vector<Edge>& edges() const { return shape_.edges(); }
    const std::map<int, int>& labels() const { return shape_.labels(); }
    int n_labels() const { return shape_.n_labels(); }
    int leaf_label_count() const { return shape_.leaf_label_count(); }
    int non_leaf_label_count() const { return shape_.non_leaf_label_count(); }

    const std::vector<Edge>& non_twig_edges() const { return non_twig_edges_; }
    // leaf-label -> its twig.
    const std::map<int, Edge>& twig_edges() const { return twig_edges_; }

    int degree(int v) const { return shape_.degree(v); }
    bool is_leaf(int v) const { return shape_.is_leaf(v); }
    std::optional<int> label_of(int vertex) const { return shape_.label_of(vertex); }
    int vertex_of_label(int label) const { return shape_.vertex_of_label(label); }

    const detail::Shape& shape() const { return shape_; }
    std::string canonical_string() const { return shape_.canonical_string(nullptr); }

    // Attaches weights: one per non-twig edge in non_twig_edges() order,
    // plus a weight per leaf label. Throws if any weight is nonpositive.
    WeightedTree with_weights(const std::map<int, Rational>& twig_weights,
                              const std::vector<Rational>& non_twig_weights) const;

private:
    detail::Shape shape_;
    std::vector<Edge> non_twig_edges_;
    std::map<int, Edge> twig_edges_;
};

}  // namespace treeweights
