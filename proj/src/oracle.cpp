#include "treeweights/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace treeweights {

BruteForceTable::BruteForceTable(const WeightedTree& tree) : tree_(tree) {
    const auto& edges = tree.edges();
    const int e_count = static_cast<int>(edges.size());
    if (e_count > 16) throw DomainError("brute force capped at 16 edges");

    std::map<int, int> vertex_bit;
    for (int v : tree.vertices()) {
        const int bit = static_cast<int>(vertex_bit.size());
        vertex_bit.emplace(v, bit);
    }

    std::vector<Rational> subset_weight(std::size_t(1) << e_count);
    subset_weight[0] = 0;
    for (std::uint32_t mask = 1; mask < subset_weight.size(); ++mask) {
        const int low = std::countr_zero(mask);
        subset_weight[mask] =
            subset_weight[mask & (mask - 1)] + tree.weight(edges[low]);
    }

    for (std::uint32_t mask = 1; mask < subset_weight.size(); ++mask) {
        // Subsets of tree edges are forests; such a forest is a single
        // subtree iff it touches exactly one more vertex than it has edges.
        std::uint32_t vmask = 0;
        for (int i = 0; i < e_count; ++i) {
            if (!(mask & (1u << i))) continue;
            vmask |= 1u << vertex_bit.at(edges[i].u);
            vmask |= 1u << vertex_bit.at(edges[i].v);
        }
        if (std::popcount(vmask) == std::popcount(mask) + 1) {
            vertex_masks_.push_back(vmask);
            weights_.push_back(subset_weight[mask]);
        }
    }
}

std::uint32_t BruteForceTable::target_mask(const LabelSubset& subset) const {
    std::map<int, int> vertex_bit;
    for (int v : tree_.vertices()) {
        const int bit = static_cast<int>(vertex_bit.size());
        vertex_bit.emplace(v, bit);
    }
    std::uint32_t mask = 0;
    for (int label : subset.members()) {
        mask |= 1u << vertex_bit.at(tree_.vertex_of_label(label));
    }
    return mask;
}

Rational BruteForceTable::k_weight(const LabelSubset& subset) const {
    for (int label : subset.members()) tree_.vertex_of_label(label);
    if (subset.size() == 1) return 0;
    const std::uint32_t target = target_mask(subset);
    const Rational* best = nullptr;
    for (std::size_t i = 0; i < vertex_masks_.size(); ++i) {
        if ((vertex_masks_[i] & target) != target) continue;
        if (best == nullptr || weights_[i] < *best) best = &weights_[i];
    }
    if (best == nullptr) throw DomainError("no spanning subtree found");
    return *best;
}

Rational brute_force_k_weight(const WeightedTree& tree, const LabelSubset& subset) {
    return BruteForceTable(tree).k_weight(subset);
}

namespace {

struct Candidate {
    std::vector<int> vertices;
    std::vector<Edge> edges;
    std::map<int, int> labels;
};

// Vertex ids renamed so the vertex of label j becomes j and unlabeled
// vertices take n+1, n+2, ... in order of appearance in the edge list.
Topology normalize_ids(const Candidate& c) {
    const int n = static_cast<int>(c.labels.size());
    std::map<int, int> rename;
    for (const auto& [label, vertex] : c.labels) rename[vertex] = label;
    int next = n + 1;
    std::vector<Edge> sorted_edges = c.edges;
    std::sort(sorted_edges.begin(), sorted_edges.end());
    for (const Edge& e : sorted_edges) {
        for (int v : {e.u, e.v}) {
            if (!rename.count(v)) rename[v] = next++;
        }
    }
    std::vector<int> vertices;
    for (const auto& [old_id, new_id] : rename) vertices.push_back(new_id);
    std::vector<Edge> edges;
    for (const Edge& e : sorted_edges) {
        edges.emplace_back(rename.at(e.u), rename.at(e.v));
    }
    std::map<int, int> labels;
    for (const auto& [label, vertex] : c.labels) {
        labels.emplace(label, rename.at(vertex));
    }
    return Topology(std::move(vertices), std::move(edges), std::move(labels));
}

}  // namespace

TopologyCatalog enumerate_topologies(int n, TopologyConstraint constraint,
                                     int non_leaf_labels) {
    if (n < 2) throw DomainError("topology enumeration requires n >= 2");
    if (n > 8) throw DomainError("topology enumeration capped at n = 8");

    // A label on an internal vertex never becomes a leaf label again as the
    // tree grows, so the non-leaf-label count is monotone along the
    // generation and constrained runs can prune whole branches.
    const int max_internal = constraint == TopologyConstraint::LeafOnly
                                 ? 0
                                 : constraint == TopologyConstraint::ExactNonLeafLabels
                                       ? non_leaf_labels
                                       : n;

    // Grow label by label: every reduced labeled tree on [k] arises from one
    // on [k-1] by attaching a new labeled leaf (optionally on a subdividing
    // vertex), labeling an unlabeled vertex, or subdividing an edge with a
    // labeled vertex.
    std::map<std::string, Topology> level;
    {
        Candidate base{{1, 2}, {Edge(1, 2)}, {{1, 1}, {2, 2}}};
        Topology t = normalize_ids(base);
        level.emplace(t.canonical_string(), std::move(t));
    }

    for (int next_label = 3; next_label <= n; ++next_label) {
        std::map<std::string, Topology> grown;
        auto consider = [&](const Candidate& c) {
            Topology t = normalize_ids(c);
            if (t.non_leaf_label_count() > max_internal) return;
            std::string key = t.canonical_string();
            grown.emplace(std::move(key), std::move(t));
        };
        for (const auto& [key, topo] : level) {
            const int fresh = topo.vertices().back() + 1;
            // New labeled leaf on an existing vertex.
            for (int v : topo.vertices()) {
                Candidate c{topo.vertices(), topo.edges(), topo.labels()};
                c.vertices.push_back(fresh);
                c.edges.emplace_back(v, fresh);
                c.labels.emplace(next_label, fresh);
                consider(c);
            }
            for (const Edge& e : topo.edges()) {
                Candidate base{topo.vertices(), topo.edges(), topo.labels()};
                base.edges.erase(std::find(base.edges.begin(), base.edges.end(), e));
                base.vertices.push_back(fresh);
                base.edges.emplace_back(e.u, fresh);
                base.edges.emplace_back(fresh, e.v);
                {
                    // Subdivide with an unlabeled vertex carrying a new leaf.
                    Candidate c = base;
                    c.vertices.push_back(fresh + 1);
                    c.edges.emplace_back(fresh, fresh + 1);
                    c.labels.emplace(next_label, fresh + 1);
                    consider(c);
                }
                {
                    // Subdivide with a labeled degree-2 vertex.
                    Candidate c = base;
                    c.labels.emplace(next_label, fresh);
                    consider(c);
                }
            }
            // Label an unlabeled vertex.
            for (int v : topo.vertices()) {
                if (topo.label_of(v)) continue;
                Candidate c{topo.vertices(), topo.edges(), topo.labels()};
                c.labels.emplace(next_label, v);
                consider(c);
            }
        }
        level = std::move(grown);
    }

    TopologyCatalog catalog;
    catalog.n_labels = n;
    catalog.constraint = constraint;
    catalog.non_leaf_labels = non_leaf_labels;
    for (const auto& [key, topo] : level) {
        const int m = topo.non_leaf_label_count();
        if (constraint == TopologyConstraint::LeafOnly && m != 0) continue;
        if (constraint == TopologyConstraint::ExactNonLeafLabels &&
            m != non_leaf_labels) {
            continue;
        }
        catalog.items.push_back(topo);
    }
    return catalog;
}

namespace {

// Spanning edge set of a label subset as a bitmask, via the union of
// pairwise paths (deliberately not the subtree-count method the library
// uses, so the two routes check each other).
std::uint32_t span_mask_by_paths(const Topology& topo, const LabelSubset& subset) {
    const auto& edges = topo.edges();
    std::map<Edge, int> index;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) index[edges[i]] = i;

    std::uint32_t mask = 0;
    const auto& members = subset.members();
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            const int from = topo.vertex_of_label(members[a]);
            const int to = topo.vertex_of_label(members[b]);
            // DFS path from -> to.
            std::vector<std::pair<int, int>> stack{{from, -1}};
            std::map<int, int> parent;
            parent[from] = -1;
            while (!stack.empty()) {
                auto [v, par] = stack.back();
                stack.pop_back();
                if (v == to) break;
                for (int w : topo.shape().neighbors(v)) {
                    if (w == par) continue;
                    parent[w] = v;
                    stack.emplace_back(w, v);
                }
            }
            for (int v = to; parent.at(v) != -1; v = parent.at(v)) {
                mask |= 1u << index.at(Edge(v, parent.at(v)));
            }
        }
    }
    return mask;
}

struct GridConstraint {
    std::uint32_t mask = 0;
    std::int64_t target = 0;
    std::int64_t sum = 0;
    int remaining = 0;
};

struct GridSearch {
    int e_count = 0;
    std::int64_t cap = 0;
    std::vector<GridConstraint> constraints;
    std::vector<std::int64_t> assignment;
    std::vector<char> assigned;
    std::vector<std::vector<int>> touching;  // edge -> constraint indices
    std::vector<std::vector<std::int64_t>> hits;

    // Always updates every touched constraint, so undo stays symmetric even
    // when the new assignment is infeasible.
    bool apply(int edge, std::int64_t value) {
        assignment[edge] = value;
        assigned[edge] = 1;
        bool feasible = true;
        for (int ci : touching[edge]) {
            auto& c = constraints[ci];
            c.sum += value;
            --c.remaining;
            if (c.sum + c.remaining > c.target) feasible = false;  // each >= 1
            if (c.sum + c.remaining * cap < c.target) feasible = false;
            if (c.remaining == 0 && c.sum != c.target) feasible = false;
        }
        return feasible;
    }

    void undo(int edge) {
        for (int ci : touching[edge]) {
            auto& c = constraints[ci];
            c.sum -= assignment[edge];
            ++c.remaining;
        }
        assigned[edge] = 0;
    }

    void search() {
        // Forced move: some constraint has exactly one unassigned edge.
        for (const auto& c : constraints) {
            if (c.remaining != 1) continue;
            int edge = -1;
            for (int i = 0; i < e_count; ++i) {
                if (!assigned[i] && (c.mask & (1u << i))) {
                    edge = i;
                    break;
                }
            }
            const std::int64_t forced = c.target - c.sum;
            if (forced < 1 || forced > cap) return;
            if (apply(edge, forced)) search();
            undo(edge);
            return;
        }
        int edge = -1;
        for (int i = 0; i < e_count; ++i) {
            if (!assigned[i]) {
                edge = i;
                break;
            }
        }
        if (edge < 0) {
            hits.push_back(assignment);
            return;
        }
        for (std::int64_t value = 1; value <= cap; ++value) {
            if (apply(edge, value)) search();
            undo(edge);
        }
    }
};

}  // namespace

std::vector<WeightedTree> exhaustive_realizability(const WeightFamily& fam,
                                                   const Rational& grid_step,
                                                   TopologyConstraint constraint,
                                                   int non_leaf_labels) {
    if (fam.n() > 6) throw DomainError("exhaustive realizability capped at n = 6");
    if (grid_step <= 0) throw DomainError("grid step must be positive");

    // Scale everything to integer multiples of the step; a constraint whose
    // value is off-grid can never be met by on-grid weights.
    Rational max_entry = 0;
    for (const auto& [subset, value] : fam.entries()) {
        max_entry = std::max(max_entry, value);
    }
    std::vector<std::pair<LabelSubset, std::int64_t>> scaled;
    for (const auto& [subset, value] : fam.entries()) {
        const Rational q = value / grid_step;
        if (denominator(q) != 1) return {};
        scaled.emplace_back(subset, static_cast<std::int64_t>(numerator(q)));
    }
    const Rational cap_q = max_entry / grid_step;
    if (cap_q > 1000000) throw DomainError("grid too fine for exhaustive search");
    const std::int64_t cap = static_cast<std::int64_t>(numerator(cap_q) /
                                                       denominator(cap_q));

    std::vector<WeightedTree> found;
    const TopologyCatalog catalog =
        enumerate_topologies(fam.n(), constraint, non_leaf_labels);
    for (const Topology& topo : catalog.items) {
        const int e_count = static_cast<int>(topo.edges().size());
        GridSearch gs;
        gs.e_count = e_count;
        gs.cap = cap;
        gs.assignment.assign(e_count, 0);
        gs.assigned.assign(e_count, 0);
        gs.touching.assign(e_count, {});
        for (const auto& [subset, target] : scaled) {
            GridConstraint c;
            c.mask = span_mask_by_paths(topo, subset);
            c.target = target;
            c.remaining = std::popcount(c.mask);
            if (c.remaining == 0) {
                // All subset labels on one vertex cannot happen; an empty
                // span with a positive target is unsatisfiable.
                if (target != 0) {
                    gs.constraints.clear();
                    gs.e_count = -1;
                }
                break;
            }
            const int ci = static_cast<int>(gs.constraints.size());
            for (int i = 0; i < e_count; ++i) {
                if (c.mask & (1u << i)) gs.touching[i].push_back(ci);
            }
            gs.constraints.push_back(c);
        }
        if (gs.e_count < 0) continue;
        gs.search();

        for (const auto& hit : gs.hits) {
            std::map<Edge, Rational> weights;
            for (int i = 0; i < e_count; ++i) {
                weights.emplace(topo.edges()[i], Rational(hit[i]) * grid_step);
            }
            WeightedTree tree(topo.vertices(), std::move(weights), topo.labels());
            const BruteForceTable table(tree);
            bool exact = true;
            for (const auto& [subset, value] : fam.entries()) {
                if (table.k_weight(subset) != value) {
                    exact = false;
                    break;
                }
            }
            if (exact) found.push_back(std::move(tree));
        }
    }
    return found;
}

}  // namespace treeweights
