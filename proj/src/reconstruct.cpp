#include "treeweights/reconstruct.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace treeweights {

namespace {

// Twig weights of the unique positive-weighted star realizing the given
// values as hat-weights: W = sum(values)/(count-1), w_j = W - value_j.
std::map<int, Rational> pseudostar_twigs(const std::map<int, Rational>& hat_values) {
    const int count = static_cast<int>(hat_values.size());
    Rational sum = 0;
    for (const auto& [label, value] : hat_values) sum += value;
    const Rational whole = sum / (count - 1);
    std::map<int, Rational> twigs;
    for (const auto& [label, value] : hat_values) {
        twigs.emplace(label, whole - value);
    }
    return twigs;
}

std::map<int, Rational> hat_values_of(const WeightFamily& fam) {
    std::map<int, Rational> values;
    for (int i = 1; i <= fam.n(); ++i) values.emplace(i, fam.hat(i));
    return values;
}

WeightedTree build_star(int center_id, std::optional<int> center_label,
                        const std::map<int, Rational>& twig_weights) {
    std::map<Edge, Rational> weights;
    std::map<int, int> labels;
    std::vector<int> vertices{center_id};
    for (const auto& [label, w] : twig_weights) {
        weights.emplace(Edge(center_id, label), w);
        labels.emplace(label, label);
        vertices.push_back(label);
    }
    if (center_label) labels.emplace(*center_label, center_id);
    return WeightedTree(std::move(vertices), std::move(weights), std::move(labels));
}

// True iff topo is the star whose center carries label c.
bool is_center_labeled_star(const Topology& topo, int c) {
    const int center = topo.vertex_of_label(c);
    if (topo.degree(center) != topo.n_labels() - 1) return false;
    for (const auto& [label, vertex] : topo.labels()) {
        if (label == c) continue;
        if (!topo.is_leaf(vertex)) return false;
    }
    return static_cast<int>(topo.vertices().size()) == topo.n_labels();
}

}  // namespace

WeightedTree canonical_pseudostar(const WeightFamily& fam) {
    const FamilyClass cls = classify_family(fam);
    if (cls.status != FamilyStatus::AllStrict) {
        throw DomainError("canonical pseudostar requires an AllStrict family");
    }
    const auto twigs = pseudostar_twigs(hat_values_of(fam));
    return build_star(fam.n() + 1, std::nullopt, twigs);
}

WeightedTree reconstruct_equality_star(const WeightFamily& fam) {
    const FamilyClass cls = classify_family(fam);
    if (cls.status != FamilyStatus::OneEquality) {
        throw DomainError("equality star requires a OneEquality family");
    }
    const int c = cls.equality_label;
    const Rational& top = fam.hat(c);
    std::map<int, Rational> twig_weights;
    for (int i = 1; i <= fam.n(); ++i) {
        if (i != c) twig_weights.emplace(i, top - fam.hat(i));
    }
    return build_star(c, c, twig_weights);
}

SimplexDescription moduli_description(const WeightFamily& fam, const Topology& topo) {
    const int n = fam.n();
    if (fam.k() != n - 1) throw DomainError("moduli require a family with k = n - 1");
    if (topo.n_labels() != n) {
        throw DomainError("topology has " + std::to_string(topo.n_labels()) +
                          " labels, family has " + std::to_string(n));
    }

    SimplexDescription desc;
    const FamilyClass cls = classify_family(fam);

    if (cls.status == FamilyStatus::Violation) return desc;

    if (cls.status == FamilyStatus::OneEquality) {
        const int c = cls.equality_label;
        if (!is_center_labeled_star(topo, c)) return desc;
        desc.kind = SimplexKind::Point;
        desc.dimension = 0;
        desc.twig_coeff = 0;
        for (int i = 1; i <= n; ++i) {
            if (i != c) desc.twig_alpha.emplace(i, fam.hat(c) - fam.hat(i));
        }
        return desc;
    }

    // AllStrict.
    const int big_n = static_cast<int>(topo.non_twig_edges().size());
    if (topo.non_leaf_label_count() == 0) {
        const auto twigs = pseudostar_twigs(hat_values_of(fam));
        desc.twig_alpha = twigs;
        desc.twig_coeff = Rational(1, n - 1);
        desc.coordinates = topo.non_twig_edges();
        if (big_n == 0) {
            desc.kind = SimplexKind::Point;
            desc.dimension = 0;
        } else {
            desc.kind = SimplexKind::OpenSumBound;
            desc.dimension = big_n;
            desc.bound = Rational(n - 1) * twigs.at(cls.sorted_labels.back());
        }
        return desc;
    }

    // Topology with non-leaf labels: those labels must be exactly the ones
    // attaining the maximum hat value, and there must be a non-twig edge.
    if (topo.non_leaf_label_count() != cls.m_max) return desc;
    const Rational& top = fam.hat(cls.sorted_labels.back());
    std::map<int, Rational> leaf_values;
    for (const auto& [label, vertex] : topo.labels()) {
        if (topo.is_leaf(vertex)) {
            if (fam.hat(label) == top) return desc;
            leaf_values.emplace(label, fam.hat(label));
        } else {
            if (fam.hat(label) != top) return desc;
        }
    }
    if (big_n == 0) return desc;

    const int leaf_count = n - cls.m_max;
    desc.kind = SimplexKind::SumEquality;
    desc.dimension = big_n - 1;
    desc.coordinates = topo.non_twig_edges();
    desc.twig_alpha = pseudostar_twigs(leaf_values);
    desc.twig_coeff = Rational(1, leaf_count - 1);
    desc.total = -Rational(leaf_count - 1) * top;
    for (const auto& [label, value] : leaf_values) desc.total += value;
    return desc;
}

WeightedTree realize_on_topology(const WeightFamily& fam, const Topology& topo,
                                 const std::vector<Rational>& coords) {
    const SimplexDescription desc = moduli_description(fam, topo);
    if (desc.kind == SimplexKind::Empty) {
        throw DomainError("no positive weights on this topology realize the family");
    }
    if (coords.size() != desc.coordinates.size()) {
        throw DomainError("expected " + std::to_string(desc.coordinates.size()) +
                          " coordinates, got " + std::to_string(coords.size()));
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] <= 0) {
            throw DomainError("coordinate for edge " +
                              edge_to_string(desc.coordinates[i]) +
                              " must be strictly positive");
        }
        sum += coords[i];
    }
    if (desc.kind == SimplexKind::OpenSumBound && sum >= desc.bound) {
        throw DomainError("sum of non-twig weights must be strictly below " +
                          format_rational(desc.bound));
    }
    if (desc.kind == SimplexKind::SumEquality && sum != desc.total) {
        throw DomainError("sum of non-twig weights must equal " +
                          format_rational(desc.total));
    }

    std::map<int, Rational> twig_weights;
    for (const auto& [label, alpha] : desc.twig_alpha) {
        twig_weights.emplace(label, alpha - desc.twig_coeff * sum);
    }
    return topo.with_weights(twig_weights, coords);
}

WeightedTree r_io(const WeightedTree& tree, const Edge& edge, int r) {
    if (r < 1) throw DomainError("r must be >= 1");
    const Rational y = tree.weight(edge);  // checks the edge exists
    if (tree.is_leaf(edge.u) || tree.is_leaf(edge.v)) {
        throw DomainError("cannot contract a twig");
    }
    const auto [side_u, side_v] = tree.label_split(edge);
    if (side_u <= r || side_v <= r) {
        throw DomainError("edge " + edge_to_string(edge) +
                          " splits labels " + std::to_string(side_u) + "|" +
                          std::to_string(side_v) + ", both sides must exceed r=" +
                          std::to_string(r));
    }
    const bool u_labeled = tree.label_of(edge.u).has_value();
    const bool v_labeled = tree.label_of(edge.v).has_value();
    if (u_labeled && v_labeled) {
        throw DomainError("cannot contract an edge joining two labeled vertices");
    }
    const int keep = v_labeled ? edge.v : edge.u;
    const int drop = keep == edge.u ? edge.v : edge.u;

    std::map<Edge, Rational> weights;
    for (const Edge& e : tree.edges()) {
        if (e == edge) continue;
        int a = e.u == drop ? keep : e.u;
        int b = e.v == drop ? keep : e.v;
        weights.emplace(Edge(a, b), tree.weight(e));
    }
    std::vector<int> vertices;
    for (int v : tree.vertices()) {
        if (v != drop) vertices.push_back(v);
    }
    WeightedTree contracted(std::move(vertices), std::move(weights), tree.labels());

    const Rational bump = y / Rational(tree.n_labels() - r);
    std::map<Edge, Rational> adjusted;
    const auto twig_map = twigs(contracted);
    std::set<Edge> twig_set;
    for (const auto& [label, e] : twig_map) twig_set.insert(e);
    for (const Edge& e : contracted.edges()) {
        adjusted.emplace(e, contracted.weight(e) + (twig_set.count(e) ? bump : 0));
    }
    return WeightedTree(contracted.vertices(), std::move(adjusted),
                        contracted.labels());
}

WeightedTree r_oi(const WeightedTree& tree, int vertex,
                  const std::vector<Edge>& moved, const Rational& y, int r) {
    if (r < 1) throw DomainError("r must be >= 1");
    if (y <= 0) throw DomainError("new edge weight must be positive");
    if (!tree.shape().has_vertex(vertex)) {
        throw DomainError("no vertex " + std::to_string(vertex));
    }
    std::set<Edge> moved_set(moved.begin(), moved.end());
    if (moved_set.empty()) throw DomainError("no edges selected to move");
    int incident = 0;
    for (const Edge& e : moved_set) {
        if (e.u != vertex && e.v != vertex) {
            throw DomainError("edge " + edge_to_string(e) + " is not incident to vertex " +
                              std::to_string(vertex));
        }
        tree.weight(e);
    }
    for (int w : tree.shape().neighbors(vertex)) {
        if (!moved_set.count(Edge(vertex, w))) ++incident;
    }
    if (incident == 0) {
        throw DomainError("splitting must leave at least one edge at the vertex");
    }

    const Rational bump = y / Rational(tree.n_labels() - r);
    const auto twig_map = twigs(tree);
    for (const auto& [label, e] : twig_map) {
        if (tree.weight(e) <= bump) {
            throw DomainError("twig of label " + std::to_string(label) +
                              " would become nonpositive");
        }
    }

    const int fresh = tree.vertices().back() + 1;
    std::map<Edge, Rational> weights;
    std::set<Edge> twig_set;
    for (const auto& [label, e] : twig_map) twig_set.insert(e);
    for (const Edge& e : tree.edges()) {
        Edge mapped = e;
        if (moved_set.count(e)) {
            mapped = Edge(e.u == vertex ? fresh : e.u, e.v == vertex ? fresh : e.v);
        }
        weights.emplace(mapped, tree.weight(e) - (twig_set.count(e) ? bump : 0));
    }
    weights.emplace(Edge(vertex, fresh), y);
    std::vector<int> vertices = tree.vertices();
    vertices.push_back(fresh);
    WeightedTree result(std::move(vertices), std::move(weights), tree.labels());

    const auto [side_u, side_v] = result.label_split(Edge(vertex, fresh));
    if (side_u <= r || side_v <= r) {
        throw DomainError("new edge splits labels " + std::to_string(side_u) + "|" +
                          std::to_string(side_v) + ", both sides must exceed r=" +
                          std::to_string(r));
    }
    return result;
}

namespace {

// Mutable adjacency-with-weights graph used only while growing the
// 2-weight realization.
struct GrowingTree {
    std::map<int, std::map<int, Rational>> adj;
    std::map<int, int> label_pos;
    int next_aux;

    void add_edge(int a, int b, const Rational& w) {
        adj[a][b] = w;
        adj[b][a] = w;
    }
    void remove_edge(int a, int b) {
        adj[a].erase(b);
        adj[b].erase(a);
    }

    // Path between two vertices (tree: unique), found by DFS.
    std::vector<int> path(int from, int to) const {
        std::vector<int> result;
        std::function<bool(int, int)> dfs = [&](int v, int parent) {
            result.push_back(v);
            if (v == to) return true;
            for (const auto& [w, weight] : adj.at(v)) {
                if (w != parent && dfs(w, v)) return true;
            }
            result.pop_back();
            return false;
        };
        dfs(from, -1);
        return result;
    }
};

}  // namespace

WeightedTree reconstruct_from_two_weights(const WeightFamily& fam) {
    if (fam.k() != 2) throw DomainError("reconstruction requires a 2-weight family");
    if (!check_four_point(fam)) {
        throw DomainError("family is not treelike: four-point condition fails");
    }
    const int n = fam.n();

    GrowingTree g;
    g.next_aux = n + 1;
    g.add_edge(1, 2, fam.at_pair(1, 2));
    g.label_pos[1] = 1;
    g.label_pos[2] = 2;

    for (int x = 3; x <= n; ++x) {
        // Gate of x into the current tree, seen from label 1: at distance
        // t = max_b (D_1x + D_1b - D_bx)/2 along the path towards the
        // maximizing label b.
        Rational t = -1;
        int towards = 0;
        for (const auto& [b, pos] : g.label_pos) {
            if (b == 1) continue;
            const Rational gb =
                (fam.at_pair(1, x) + fam.at_pair(1, b) - fam.at_pair(b, x)) / 2;
            if (gb > t) {
                t = gb;
                towards = b;
            }
        }
        const Rational dx = fam.at_pair(1, x) - t;
        if (t < 0 || dx < 0) {
            throw DomainError("family is not treelike: inconsistent distances");
        }

        // Walk from label 1 towards `towards` and stop at distance t.
        const std::vector<int> route = g.path(g.label_pos.at(1), g.label_pos.at(towards));
        Rational walked = 0;
        int attach = t == 0 ? route.front() : -1;
        for (std::size_t i = 0; i + 1 < route.size() && attach < 0; ++i) {
            const int next = route[i + 1];
            const Rational step = g.adj.at(route[i]).at(next);
            if (walked + step < t) {
                walked += step;
                continue;
            }
            if (walked + step == t) {
                attach = next;
            } else {
                // Split the edge at distance t - walked from route[i];
                // both parts are strictly positive.
                const int mid = dx == 0 ? x : g.next_aux++;
                g.remove_edge(route[i], next);
                g.add_edge(route[i], mid, t - walked);
                g.add_edge(mid, next, walked + step - t);
                attach = mid;
            }
        }
        if (attach < 0) {
            throw DomainError("family is not treelike: inconsistent distances");
        }

        if (dx == 0) {
            bool occupied = false;
            for (const auto& [b, pos] : g.label_pos) occupied |= (pos == attach);
            if (occupied) {
                throw DomainError("family is not treelike: two labels at distance 0");
            }
            g.label_pos[x] = attach;
        } else {
            g.add_edge(attach, x, dx);
            g.label_pos[x] = x;
        }
    }

    std::map<Edge, Rational> weights;
    std::vector<int> vertices;
    for (const auto& [v, nbrs] : g.adj) {
        vertices.push_back(v);
        for (const auto& [w, weight] : nbrs) {
            if (v < w) weights.emplace(Edge(v, w), weight);
        }
    }
    WeightedTree result(std::move(vertices), std::move(weights), g.label_pos);

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (k_weight(result, LabelSubset({i, j})) != fam.at_pair(i, j)) {
                throw DomainError("family is not treelike: verification failed");
            }
        }
    }
    return result;
}

}  // namespace treeweights
