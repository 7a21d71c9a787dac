#pragma once

#include <map>
#include <vector>

#include "treeweights/family.hpp"
#include "treeweights/topology.hpp"
#include "treeweights/tree.hpp"

namespace treeweights {

enum class SimplexKind { OpenSumBound, SumEquality, Point, Empty };

// Moduli of positive weights on a fixed topology realizing a fixed
// (n-1)-weight family, parametrized by the non-twig edge weights.
// Twig weights are affine in the coordinates:
//   w(twig_j) = twig_alpha[j] - twig_coeff * sum(coords).
// Admissibility is strict throughout (open simplices):
//   OpenSumBound: every coord > 0 and sum(coords) < bound   (dimension N)
//   SumEquality:  every coord > 0 and sum(coords) = total   (dimension N-1)
//   Point:        no coordinates                            (dimension 0)
//   Empty:        no positive weights realize the family here.
struct SimplexDescription {
    SimplexKind kind = SimplexKind::Empty;
    int dimension = -1;
    std::vector<Edge> coordinates;
    Rational bound;
    Rational total;
    std::map<int, Rational> twig_alpha;
    Rational twig_coeff;
};

// The unique essential 1-pseudostar (star with unlabeled center) realizing
// an AllStrict family: twig weights (sum_{k != j} D_hat(k) - (n-2) D_hat(j)) / (n-1).
WeightedTree canonical_pseudostar(const WeightFamily& fam);

// The unique realization of a OneEquality(c) family: the star whose center
// carries label c, with w(e(c,k)) = D_hat(c) - D_hat(k).
WeightedTree reconstruct_equality_star(const WeightFamily& fam);

// Case analysis of the moduli of positive weights on `topo` realizing `fam`.
SimplexDescription moduli_description(const WeightFamily& fam, const Topology& topo);

// Builds the weighted tree for the given coordinates after a strict
// membership check; throws DomainError naming the violated constraint.
WeightedTree realize_on_topology(const WeightFamily& fam, const Topology& topo,
                                 const std::vector<Rational>& coords);

// Contracts a non-twig edge whose label split has both sides > r and adds
// weight(edge)/(n-r) to every twig.
WeightedTree r_io(const WeightedTree& tree, const Edge& edge, int r);

// Inverse of r_io: splits `vertex`, moving the edges in `moved` to a fresh
// unlabeled vertex joined by a new edge of weight y, and subtracts y/(n-r)
// from every twig.
WeightedTree r_oi(const WeightedTree& tree, int vertex,
                  const std::vector<Edge>& moved, const Rational& y, int r);

// The unique positive-weighted reduced labeled tree whose 2-weights equal
// `fam` (labels land on internal vertices at exact triangle equalities).
// Requires check_four_point; the output is re-verified against the input.
WeightedTree reconstruct_from_two_weights(const WeightFamily& fam);

}  // namespace treeweights
