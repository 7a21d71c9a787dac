#include "treeweights/tree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "treeweights/family.hpp"

namespace treeweights {

LabelSubset::LabelSubset(std::vector<int> members) : members_(std::move(members)) {
    if (members_.empty()) throw DomainError("label subset must be nonempty");
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i + 1 < members_.size(); ++i) {
        if (members_[i] == members_[i + 1]) {
            throw DomainError("duplicate label in subset");
        }
    }
    if (members_.front() < 1) throw DomainError("labels are positive integers");
}

bool LabelSubset::contains(int label) const {
    return std::binary_search(members_.begin(), members_.end(), label);
}

std::string LabelSubset::key() const {
    std::string out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(members_[i]);
    }
    return out;
}

LabelSubset LabelSubset::from_key(const std::string& key) {
    std::vector<int> members;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const int value = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            members.push_back(value);
        } catch (const std::exception&) {
            throw ParseError("invalid subset key: '" + key + "'");
        }
    }
    if (members.empty()) throw ParseError("empty subset key");
    return LabelSubset(std::move(members));
}

LabelSubset hat_subset(int n, int label) {
    std::vector<int> members;
    for (int i = 1; i <= n; ++i) {
        if (i != label) members.push_back(i);
    }
    return LabelSubset(std::move(members));
}

namespace {

std::vector<int> edge_endpoints(const std::map<Edge, Rational>& weights) {
    std::vector<int> vertices;
    for (const auto& [e, w] : weights) {
        vertices.push_back(e.u);
        vertices.push_back(e.v);
    }
    return vertices;
}

std::vector<Edge> edge_keys(const std::map<Edge, Rational>& weights) {
    std::vector<Edge> edges;
    for (const auto& [e, w] : weights) edges.push_back(e);
    return edges;
}

}  // namespace

WeightedTree::WeightedTree(std::vector<int> vertices,
                           std::map<Edge, Rational> weights,
                           std::map<int, int> label_to_vertex)
    : shape_(vertices.empty() ? edge_endpoints(weights) : std::move(vertices),
             edge_keys(weights), std::move(label_to_vertex)),
      weights_(std::move(weights)) {
    for (const auto& [e, w] : weights_) {
        if (w <= 0) {
            throw DomainError("nonpositive weight on edge " + edge_to_string(e));
        }
    }
}

const Rational& WeightedTree::weight(const Edge& e) const {
    auto it = weights_.find(e);
    if (it == weights_.end()) throw DomainError("no edge " + edge_to_string(e));
    return it->second;
}

Rational WeightedTree::total_weight() const {
    Rational total = 0;
    for (const auto& [e, w] : weights_) total += w;
    return total;
}

std::string WeightedTree::canonical_string() const {
    std::vector<std::string> tags;
    tags.reserve(edges().size());
    for (const Edge& e : edges()) tags.push_back(format_rational(weight(e)));
    return shape_.canonical_string(&tags);
}

Rational k_weight(const WeightedTree& tree, const LabelSubset& subset) {
    std::vector<int> targets;
    targets.reserve(subset.members().size());
    for (int label : subset.members()) {
        targets.push_back(tree.vertex_of_label(label));
    }
    const std::vector<char> span = tree.shape().span_edges(targets);
    Rational total = 0;
    const auto& edges = tree.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (span[i]) total += tree.weight(edges[i]);
    }
    return total;
}

namespace {

void each_subset(int n, int k, const std::function<void(const LabelSubset&)>& fn) {
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            fn(LabelSubset(pick));
            return;
        }
        for (int v = start; v <= n - (k - depth - 1); ++v) {
            pick[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(1, 0);
}

}  // namespace

WeightFamily all_k_weights(const WeightedTree& tree, int k) {
    const int n = tree.n_labels();
    if (k < 2 || k > n) {
        throw DomainError("k must satisfy 2 <= k <= n (got k=" +
                          std::to_string(k) + ", n=" + std::to_string(n) + ")");
    }
    std::map<LabelSubset, Rational> entries;
    each_subset(n, k, [&](const LabelSubset& subset) {
        entries.emplace(subset, k_weight(tree, subset));
    });
    return WeightFamily(n, k, std::move(entries));
}

bool is_reduced(const WeightedTree& tree) {
    for (int v : tree.vertices()) {
        if (tree.degree(v) == 2 && !tree.label_of(v)) return false;
    }
    return true;
}

bool is_essential(const WeightedTree& tree) {
    for (int v : tree.vertices()) {
        if (tree.degree(v) == 2) return false;
    }
    return true;
}

bool is_r_pseudostar(const WeightedTree& tree, int r) {
    if (r < 1) throw DomainError("r must be >= 1");
    for (const Edge& e : tree.edges()) {
        const auto [a, b] = tree.shape().leaf_split(e);
        if (std::min(a, b) > r) return false;
    }
    return true;
}

std::map<int, Edge> twigs(const WeightedTree& tree) {
    std::map<int, Edge> out;
    for (const auto& [label, vertex] : tree.labels()) {
        if (!tree.is_leaf(vertex)) continue;
        const int other = tree.shape().neighbors(vertex).front();
        out.emplace(label, Edge(vertex, other));
    }
    return out;
}

}  // namespace treeweights
