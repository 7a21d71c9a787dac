#include "treeweights/family.hpp"

#include <algorithm>

namespace treeweights {

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) /
                 static_cast<std::uint64_t>(i);
    }
    return result;
}

}  // namespace

WeightFamily::WeightFamily(int n, int k, std::map<LabelSubset, Rational> entries)
    : n_(n), k_(k), entries_(std::move(entries)) {
    if (n_ < 2) throw DomainError("a weight family needs n >= 2 labels");
    if (k_ < 2 || k_ > n_) throw DomainError("family order k must satisfy 2 <= k <= n");
    if (entries_.size() != binomial(n_, k_)) {
        throw DomainError("family must have exactly C(n,k) entries");
    }
    for (const auto& [subset, value] : entries_) {
        if (subset.size() != k_ || subset.members().back() > n_) {
            throw DomainError("subset " + subset.key() + " is not a " +
                              std::to_string(k_) + "-subset of [n]");
        }
        if (value <= 0) {
            throw DomainError("entry for {" + subset.key() + "} must be positive");
        }
    }
}

const Rational& WeightFamily::at(const LabelSubset& subset) const {
    auto it = entries_.find(subset);
    if (it == entries_.end()) {
        throw DomainError("no entry for subset {" + subset.key() + "}");
    }
    return it->second;
}

const Rational& WeightFamily::at_pair(int a, int b) const {
    return at(LabelSubset({a, b}));
}

const Rational& WeightFamily::hat(int label) const {
    if (k_ != n_ - 1) throw DomainError("hat entries require k = n - 1");
    return at(hat_subset(n_, label));
}

bool check_triangle(const WeightFamily& fam) {
    if (fam.k() != 2) throw DomainError("triangle check requires k = 2");
    const int n = fam.n();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int h = 1; h <= n; ++h) {
                if (h == i || h == j) continue;
                if (fam.at_pair(i, j) > fam.at_pair(i, h) + fam.at_pair(j, h)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool check_four_point(const WeightFamily& fam) {
    if (fam.k() != 2) throw DomainError("four-point check requires k = 2");
    if (!check_triangle(fam)) return false;
    const int n = fam.n();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int h = j + 1; h <= n; ++h) {
                for (int l = h + 1; l <= n; ++l) {
                    const Rational s1 = fam.at_pair(i, j) + fam.at_pair(h, l);
                    const Rational s2 = fam.at_pair(i, h) + fam.at_pair(j, l);
                    const Rational s3 = fam.at_pair(i, l) + fam.at_pair(j, h);
                    const Rational top = std::max({s1, s2, s3});
                    int hits = 0;
                    if (s1 == top) ++hits;
                    if (s2 == top) ++hits;
                    if (s3 == top) ++hits;
                    if (hits < 2) return false;
                }
            }
        }
    }
    return true;
}

FamilyClass classify_family(const WeightFamily& fam) {
    const int n = fam.n();
    if (n < 3) throw DomainError("classification requires n >= 3");
    if (fam.k() != n - 1) throw DomainError("classification requires k = n - 1");

    std::vector<Rational> hat(n + 1);
    Rational sum = 0;
    for (int i = 1; i <= n; ++i) {
        hat[i] = fam.hat(i);
        sum += hat[i];
    }

    FamilyClass result;
    result.sorted_labels.resize(n);
    for (int i = 0; i < n; ++i) result.sorted_labels[i] = i + 1;
    std::stable_sort(result.sorted_labels.begin(), result.sorted_labels.end(),
                     [&](int a, int b) {
                         if (hat[a] != hat[b]) return hat[a] < hat[b];
                         return a < b;
                     });

    const Rational max_value = hat[result.sorted_labels.back()];
    for (int i = 1; i <= n; ++i) {
        if (hat[i] == max_value) ++result.m_max;
    }

    std::vector<int> greater, equal;
    for (int i = 1; i <= n; ++i) {
        const Rational lhs = Rational(n - 2) * hat[i];
        const Rational rhs = sum - hat[i];
        if (lhs > rhs) greater.push_back(i);
        else if (lhs == rhs) equal.push_back(i);
    }

    if (greater.empty() && equal.empty()) {
        result.status = FamilyStatus::AllStrict;
    } else if (greater.empty() && equal.size() == 1) {
        result.status = FamilyStatus::OneEquality;
        result.equality_label = equal.front();
    } else {
        result.status = FamilyStatus::Violation;
        result.witnesses = greater.empty() ? equal : greater;
    }
    return result;
}

bool is_positive_treelike(const WeightFamily& fam) {
    return classify_family(fam).status != FamilyStatus::Violation;
}

bool is_positive_leaf_treelike(const WeightFamily& fam) {
    return classify_family(fam).status == FamilyStatus::AllStrict;
}

}  // namespace treeweights
