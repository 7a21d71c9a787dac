#include "treeweights/topology.hpp"

namespace treeweights {

Topology::Topology(std::vector<int> vertices, std::vector<Edge> edges,
                   std::map<int, int> label_to_vertex)
    : shape_(std::move(vertices), std::move(edges), std::move(label_to_vertex)) {
    for (int v : shape_.vertices()) {
        if (shape_.degree(v) == 2 && !shape_.label_of(v)) {
            throw DomainError("topology is not reduced: unlabeled degree-2 vertex " +
                              std::to_string(v));
        }
    }
    for (const Edge& e : shape_.edges()) {
        if (shape_.is_leaf(e.u) || shape_.is_leaf(e.v)) {
            const int leaf = shape_.is_leaf(e.u) ? e.u : e.v;
            twig_edges_.emplace(*shape_.label_of(leaf), e);
        } else {
            non_twig_edges_.push_back(e);
        }
    }
}

Topology Topology::of(const WeightedTree& tree) {
    return Topology(tree.vertices(), tree.edges(), tree.labels());
}

WeightedTree Topology::with_weights(
    const std::map<int, Rational>& twig_weights,
    const std::vector<Rational>& non_twig_weights) const {
    if (non_twig_weights.size() != non_twig_edges_.size()) {
        throw DomainError("expected " + std::to_string(non_twig_edges_.size()) +
                          " non-twig weights, got " +
                          std::to_string(non_twig_weights.size()));
    }
    std::map<Edge, Rational> weights;
    for (const auto& [label, edge] : twig_edges_) {
        auto it = twig_weights.find(label);
        if (it == twig_weights.end()) {
            throw DomainError("missing twig weight for label " + std::to_string(label));
        }
        weights.emplace(edge, it->second);
    }
    for (std::size_t i = 0; i < non_twig_edges_.size(); ++i) {
        weights.emplace(non_twig_edges_[i], non_twig_weights[i]);
    }
    return WeightedTree(vertices(), std::move(weights), labels());
}

}  // namespace treeweights
