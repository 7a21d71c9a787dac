#pragma once

#include <map>
#include <vector>

#include "treeweights/rational.hpp"
#include "treeweights/tree.hpp"

namespace treeweights {

// Total map from every size-k subset of [n] to a positive rational.
class WeightFamily {
public:
    WeightFamily(int n, int k, std::map<LabelSubset, Rational> entries);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::map<LabelSubset, Rational>& entries() const { return entries_; }
    const Rational& at(const LabelSubset& subset) const;
    const Rational& at_pair(int a, int b) const;
    // Entry for [n] - {label}; only meaningful when k = n - 1.
    const Rational& hat(int label) const;

    bool operator==(const WeightFamily&) const = default;

private:
    int n_;
    int k_;
    std::map<LabelSubset, Rational> entries_;
};

enum class FamilyStatus { AllStrict, OneEquality, Violation };

// Outcome of testing (n-2) * D_hat(i) against sum_{j != i} D_hat(j) for
// every i, for a family with k = n - 1.
struct FamilyClass {
    FamilyStatus status = FamilyStatus::AllStrict;
    // Multiplicity of the maximum among the n values D_hat(i).
    int m_max = 0;
    // Labels ordered by ascending D_hat, ties by ascending label.
    std::vector<int> sorted_labels;
    // The unique equality label when status is OneEquality.
    int equality_label = 0;
    // For Violation: every label with a strict '>' if any exist, otherwise
    // the (>= 2) equality labels.
    std::vector<int> witnesses;
};

// Triangle inequalities D_ij <= D_ik + D_jk over all triples; k must be 2.
bool check_triangle(const WeightFamily& fam);

// Four-point condition (max of the three pairwise sums attained at least
// twice on every quadruple) together with the triangle inequalities.
// For n = 3 this degenerates to check_triangle.
bool check_four_point(const WeightFamily& fam);

// Exact classification of an (n-1)-weight family, n >= 3.
FamilyClass classify_family(const WeightFamily& fam);

// AllStrict or OneEquality.
bool is_positive_treelike(const WeightFamily& fam);

// AllStrict only.
bool is_positive_leaf_treelike(const WeightFamily& fam);

}  // namespace treeweights
