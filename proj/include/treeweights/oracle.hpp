#pragma once

#include <vector>

#include "treeweights/family.hpp"
#include "treeweights/topology.hpp"
#include "treeweights/tree.hpp"

namespace treeweights {

// Ground truth by explicit enumeration of connected edge subsets.
// Caps at 16 edges.
Rational brute_force_k_weight(const WeightedTree& tree, const LabelSubset& subset);

// Per-tree enumeration table; answers any subset without re-enumerating.
class BruteForceTable {
public:
    explicit BruteForceTable(const WeightedTree& tree);
    Rational k_weight(const LabelSubset& subset) const;

private:
    const WeightedTree& tree_;
    std::vector<std::uint32_t> vertex_masks_;  // per connected edge subset
    std::vector<Rational> weights_;
    std::uint32_t target_mask(const LabelSubset& subset) const;
};

enum class TopologyConstraint { All, LeafOnly, ExactNonLeafLabels };

struct TopologyCatalog {
    int n_labels = 0;
    TopologyConstraint constraint = TopologyConstraint::All;
    int non_leaf_labels = 0;  // only for ExactNonLeafLabels
    std::vector<Topology> items;
};

// All reduced labeled topologies on [n] up to label-preserving isomorphism,
// in canonical order. Caps at n = 8.
TopologyCatalog enumerate_topologies(int n, TopologyConstraint constraint,
                                     int non_leaf_labels = 0);

// Every positive-weighted tree on the given grid (all edge weights positive
// multiples of grid_step) whose k-weights equal the family, across the whole
// catalog. Each hit is re-verified with the brute-force table. Caps at n = 6.
std::vector<WeightedTree> exhaustive_realizability(
    const WeightFamily& fam, const Rational& grid_step,
    TopologyConstraint constraint = TopologyConstraint::All,
    int non_leaf_labels = 0);

}  // namespace treeweights
