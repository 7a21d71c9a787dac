#include "treeweights/multiweight.hpp"

#include <algorithm>

#include "treeweights/linsys.hpp"
#include "treeweights/oracle.hpp"

namespace treeweights {

Correspondence nm1_to_two(const WeightFamily& fam) {
    const FamilyClass cls = classify_family(fam);
    if (cls.status != FamilyStatus::OneEquality) {
        throw DomainError("conversion requires a OneEquality family");
    }
    const int n = fam.n();
    const int c = cls.equality_label;
    const Rational top = fam.hat(c);

    std::map<LabelSubset, Rational> pairs;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            Rational value;
            if (i == c || j == c) {
                const int other = i == c ? j : i;
                value = top - fam.hat(other);
            } else {
                value = 2 * top - fam.hat(i) - fam.hat(j);
            }
            pairs.emplace(LabelSubset({i, j}), value);
        }
    }
    return Correspondence{c, fam, WeightFamily(n, 2, std::move(pairs))};
}

Correspondence two_to_nm1(const WeightFamily& fam) {
    if (fam.k() != 2) throw DomainError("conversion requires a 2-weight family");
    const int n = fam.n();

    int center = 0;
    for (int c = 1; c <= n && center == 0; ++c) {
        bool additive = true;
        for (int i = 1; i <= n && additive; ++i) {
            for (int j = i + 1; j <= n && additive; ++j) {
                if (i == c || j == c) continue;
                additive = fam.at_pair(i, j) ==
                           fam.at_pair(c, i) + fam.at_pair(c, j);
            }
        }
        if (additive) center = c;
    }
    if (center == 0) {
        throw DomainError("no star center: family is not additive at any label");
    }

    std::map<LabelSubset, Rational> hats;
    Rational all = 0;
    for (int j = 1; j <= n; ++j) {
        if (j != center) all += fam.at_pair(center, j);
    }
    for (int i = 1; i <= n; ++i) {
        const Rational value =
            i == center ? all : all - fam.at_pair(center, i);
        hats.emplace(hat_subset(n, i), value);
    }
    WeightFamily nm1(n, n - 1, std::move(hats));

    const FamilyClass cls = classify_family(nm1);
    if (cls.status != FamilyStatus::OneEquality || cls.equality_label != center) {
        throw DomainError("derived family failed the OneEquality check");
    }
    return Correspondence{center, std::move(nm1), fam};
}

MixedFamily extend_family(const WeightFamily& base, const LabelSubset& subset) {
    const int k = base.k();
    if (subset.size() != k + 1) {
        throw DomainError("subset must have k + 1 = " + std::to_string(k + 1) +
                          " labels");
    }
    if (subset.members().back() > base.n()) {
        throw DomainError("subset contains a label beyond n");
    }

    // Restricted entries: for each a in S, the value on S - {a}.
    std::map<int, Rational> restricted;
    for (int a : subset.members()) {
        std::vector<int> rest;
        for (int b : subset.members()) {
            if (b != a) rest.push_back(b);
        }
        restricted.emplace(a, base.at(LabelSubset(rest)));
    }
    Rational sum = 0;
    for (const auto& [a, value] : restricted) sum += value;

    std::vector<int> witnesses;
    for (const auto& [a, value] : restricted) {
        if (Rational(k - 1) * value == sum - value) witnesses.push_back(a);
    }
    if (witnesses.empty()) {
        throw DomainError("no label of the subset satisfies the equality");
    }
    if (witnesses.size() > 1) {
        throw DomainError("several labels satisfy the equality; "
                          "the restricted family is not realizable");
    }
    const int c = witnesses.front();
    const Rational top = restricted.at(c);

    MixedFamily mixed{base, subset, c, {}};
    for (int i : subset.members()) {
        for (int j : subset.members()) {
            if (i >= j) continue;
            Rational value;
            if (i == c || j == c) {
                const int other = i == c ? j : i;
                value = top - restricted.at(other);
            } else {
                value = 2 * top - restricted.at(i) - restricted.at(j);
            }
            if (value <= 0) {
                throw DomainError("derived 2-weight for {" +
                                  LabelSubset({i, j}).key() + "} is not positive");
            }
            mixed.extra_two_weights.emplace(LabelSubset({i, j}), value);
        }
    }
    return mixed;
}

namespace {

// Linear system "k-weights of topo equal the given entries" over the edge
// weights; rows come from spanning-subtree incidence.
AffineSolutionSpace realization_space(
    const Topology& topo,
    const std::vector<std::pair<const LabelSubset*, const Rational*>>& entries) {
    const auto& edges = topo.edges();
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> rhs;
    for (const auto& [subset, value] : entries) {
        std::vector<int> targets;
        for (int label : subset->members()) {
            targets.push_back(topo.vertex_of_label(label));
        }
        const std::vector<char> span = topo.shape().span_edges(targets);
        std::vector<Rational> row(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            row[i] = span[i] ? 1 : 0;
        }
        matrix.push_back(std::move(row));
        rhs.push_back(*value);
    }
    return solve_exact(std::move(matrix), std::move(rhs));
}

WeightedTree tree_from_point(const Topology& topo,
                             const std::vector<Rational>& point) {
    std::map<Edge, Rational> weights;
    for (std::size_t i = 0; i < topo.edges().size(); ++i) {
        weights.emplace(topo.edges()[i], point[i]);
    }
    return WeightedTree(topo.vertices(), std::move(weights), topo.labels());
}

}  // namespace

EquivalenceReport mixed_treelike_equivalence(const WeightFamily& base,
                                             const LabelSubset& subset) {
    const MixedFamily mixed = extend_family(base, subset);
    const int m = base.n();
    if (m > 7) throw DomainError("exhaustive equivalence capped at m = 7");

    std::vector<std::pair<const LabelSubset*, const Rational*>> base_entries;
    for (const auto& [s, value] : base.entries()) {
        base_entries.emplace_back(&s, &value);
    }
    std::vector<std::pair<const LabelSubset*, const Rational*>> mixed_entries =
        base_entries;
    for (const auto& [s, value] : mixed.extra_two_weights) {
        mixed_entries.emplace_back(&s, &value);
    }

    EquivalenceReport report;
    const TopologyCatalog catalog =
        enumerate_topologies(m, TopologyConstraint::All);
    report.topologies_checked = static_cast<int>(catalog.items.size());

    for (const Topology& topo : catalog.items) {
        const AffineSolutionSpace base_space = realization_space(topo, base_entries);
        if (base_space.consistent) {
            if (auto point = positive_point(base_space)) {
                report.base_topologies.push_back(topo.canonical_string());
                if (!report.base_tree) {
                    report.base_tree = tree_from_point(topo, *point);
                }
            }
        }
        const AffineSolutionSpace mixed_space =
            realization_space(topo, mixed_entries);
        if (mixed_space.consistent) {
            if (auto point = positive_point(mixed_space)) {
                report.mixed_topologies.push_back(topo.canonical_string());
                if (!report.mixed_tree) {
                    report.mixed_tree = tree_from_point(topo, *point);
                }
            }
        }
    }

    report.base_treelike = !report.base_topologies.empty();
    report.mixed_treelike = !report.mixed_topologies.empty();
    if (report.base_treelike != report.mixed_treelike) {
        throw std::logic_error("mixed family verdict diverged from the base family");
    }
    if (report.base_tree) report.shared_tree = report.base_tree;
    return report;
}

}  // namespace treeweights
