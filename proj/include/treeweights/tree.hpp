#pragma once

#include <map>
#include <string>
#include <vector>

#include "treeweights/rational.hpp"
#include "treeweights/shape.hpp"

namespace treeweights {

class WeightFamily;

// Sorted, duplicate-free, nonempty set of labels from [n].
class LabelSubset {
public:
    explicit LabelSubset(std::vector<int> members);

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int label) const;

    // "1,2,3" — the canonical key used in family documents.
    std::string key() const;
    static LabelSubset from_key(const std::string& key);

    auto operator<=>(const LabelSubset&) const = default;

private:
    std::vector<int> members_;
};

// Complement of {label} in [n].
LabelSubset hat_subset(int n, int label);

// Immutable labeled tree with strictly positive rational edge weights.
// Every leaf carries a label; internal vertices may carry labels too.
class WeightedTree {
public:
    WeightedTree(std::vector<int> vertices, std::map<Edge, Rational> weights,
                 std::map<int, int> label_to_vertex);

    const std::vector<int>& vertices() const { return shape_.vertices(); }
    const std::vector<Edge>& edges() const { return shape_.edges(); }
    const std::map<int, int>& labels() const { return shape_.labels(); }
    int n_labels() const { return shape_.n_labels(); }

    const Rational& weight(const Edge& e) const;
    Rational total_weight() const;

    int degree(int v) const { return shape_.degree(v); }
    bool is_leaf(int v) const { return shape_.is_leaf(v); }
    std::optional<int> label_of(int vertex) const { return shape_.label_of(vertex); }
    int vertex_of_label(int label) const { return shape_.vertex_of_label(label); }
    int leaf_label_count() const { return shape_.leaf_label_count(); }
    int non_leaf_label_count() const { return shape_.non_leaf_label_count(); }
    std::pair<int, int> label_split(const Edge& e) const {
        return shape_.label_split(e);
    }

    const detail::Shape& shape() const { return shape_; }

    // Canonical string; equal iff the trees are label-preserving weighted
    // isomorphic (unlabeled vertex ids do not matter).
    std::string canonical_string() const;

private:
    detail::Shape shape_;
    std::map<Edge, Rational> weights_;
};

// Total weight of the minimal connected subtree containing every vertex
// that carries a label of `subset`. A single label spans no edges.
Rational k_weight(const WeightedTree& tree, const LabelSubset& subset);

// The family of all size-k weights, 2 <= k <= n.
WeightFamily all_k_weights(const WeightedTree& tree, int k);

// Every degree-2 vertex is labeled.
bool is_reduced(const WeightedTree& tree);

// No vertex has degree 2.
bool is_essential(const WeightedTree& tree);

// Every edge splits the leaves with one side of cardinality <= r.
// A 1-pseudostar is a star.
bool is_r_pseudostar(const WeightedTree& tree, int r);

// leaf-label -> its unique incident edge.
std::map<int, Edge> twigs(const WeightedTree& tree);

}  // namespace treeweights
