#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treeweights/family.hpp"
#include "treeweights/tree.hpp"

namespace treeweights {

// Paired (n-1)-weight family with OneEquality at `center` and the 2-weight
// family of the same rigid star:
//   D_ic = D_hat(c) - D_hat(i),  D_ij = 2 D_hat(c) - D_hat(i) - D_hat(j).
struct Correspondence {
    int center = 0;
    WeightFamily family_nm1;
    WeightFamily family_two;
};

// (n-1)-weights -> 2-weights; requires OneEquality.
Correspondence nm1_to_two(const WeightFamily& fam);

// 2-weights -> (n-1)-weights; requires a star center c with
// D_ij = D_ci + D_cj for all i, j != c.
Correspondence two_to_nm1(const WeightFamily& fam);

// A size-k family over [m] extended by the 2-weights it forces on a
// distinguished (k+1)-subset.
struct MixedFamily {
    WeightFamily base;
    LabelSubset subset;
    int distinguished = 0;  // the a_{k+1} role: the equality witness
    std::map<LabelSubset, Rational> extra_two_weights;
};

// Derives the forced 2-weights on `subset`. The k+1 restricted entries must
// satisfy (k-1) * D_{S - c} = sum_{a in S, a != c} D_{S - a} for exactly one
// c in S, and every derived 2-weight must be positive.
MixedFamily extend_family(const WeightFamily& base, const LabelSubset& subset);

struct EquivalenceReport {
    bool base_treelike = false;
    bool mixed_treelike = false;
    int topologies_checked = 0;
    // Canonical strings of topologies admitting a positive realization.
    std::vector<std::string> base_topologies;
    std::vector<std::string> mixed_topologies;
    // Deterministic realizations from the first feasible topology.
    std::optional<WeightedTree> base_tree;
    std::optional<WeightedTree> mixed_tree;
    std::optional<WeightedTree> shared_tree;
};

// Decides positive-treelikeness of the base family and of the mixed family
// by exhaustive search over all reduced topologies on [m] (m <= 7) with
// exact linear feasibility, and checks that the verdicts agree.
EquivalenceReport mixed_treelike_equivalence(const WeightFamily& base,
                                             const LabelSubset& subset);

}  // namespace treeweights
