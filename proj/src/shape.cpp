#include "treeweights/shape.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace treeweights {

std::string edge_to_string(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

namespace detail {

Shape::Shape(std::vector<int> vertices, std::vector<Edge> edges,
             std::map<int, int> label_to_vertex)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      label_to_vertex_(std::move(label_to_vertex)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                    vertices_.end());
    std::sort(edges_.begin(), edges_.end());

    if (vertices_.size() < 2 || edges_.empty()) {
        throw DomainError("a tree must have at least one edge");
    }
    if (edges_.size() != vertices_.size() - 1) {
        throw DomainError("edge count must be vertex count minus one");
    }
    for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
        if (edges_[i] == edges_[i + 1]) throw DomainError("duplicate edge");
    }
    const std::set<int> vset(vertices_.begin(), vertices_.end());
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw DomainError("self-loop edge");
        if (!vset.count(e.u) || !vset.count(e.v)) {
            throw DomainError("edge references unknown vertex");
        }
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& [v, nbrs] : adj_) std::sort(nbrs.begin(), nbrs.end());
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        edge_index_[edges_[i]] = i;
    }

    // Connectivity: |E| = |V| - 1 plus one reachability sweep.
    std::set<int> seen;
    std::vector<int> stack{vertices_.front()};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        auto it = adj_.find(v);
        if (it == adj_.end()) continue;
        for (int w : it->second) {
            if (!seen.count(w)) stack.push_back(w);
        }
    }
    if (seen.size() != vertices_.size()) {
        throw DomainError("edge set is not connected");
    }

    // Labels must be exactly 1..n, injective, on existing vertices.
    const int n = static_cast<int>(label_to_vertex_.size());
    int expected = 1;
    for (const auto& [label, vertex] : label_to_vertex_) {
        if (label != expected++) {
            throw DomainError("labels must be exactly 1..n");
        }
        if (!vset.count(vertex)) {
            throw DomainError("label placed on unknown vertex");
        }
        if (!vertex_to_label_.emplace(vertex, label).second) {
            throw DomainError("two labels on the same vertex");
        }
    }
    if (n == 0) throw DomainError("a labeled tree needs at least one label");

    for (int v : vertices_) {
        if (is_leaf(v) && !vertex_to_label_.count(v)) {
            throw DomainError("unlabeled leaf at vertex " + std::to_string(v));
        }
    }
}

bool Shape::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Shape::degree(int v) const {
    auto it = adj_.find(v);
    return it == adj_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<int>& Shape::neighbors(int v) const {
    static const std::vector<int> empty;
    auto it = adj_.find(v);
    return it == adj_.end() ? empty : it->second;
}

std::optional<int> Shape::label_of(int vertex) const {
    auto it = vertex_to_label_.find(vertex);
    if (it == vertex_to_label_.end()) return std::nullopt;
    return it->second;
}

int Shape::vertex_of_label(int label) const {
    auto it = label_to_vertex_.find(label);
    if (it == label_to_vertex_.end()) {
        throw DomainError("unknown label " + std::to_string(label));
    }
    return it->second;
}

std::vector<int> Shape::leaves() const {
    std::vector<int> out;
    for (int v : vertices_) {
        if (is_leaf(v)) out.push_back(v);
    }
    return out;
}

int Shape::leaf_count() const { return static_cast<int>(leaves().size()); }

int Shape::leaf_label_count() const {
    int count = 0;
    for (const auto& [label, vertex] : label_to_vertex_) {
        if (is_leaf(vertex)) ++count;
    }
    return count;
}

int Shape::non_leaf_label_count() const {
    return n_labels() - leaf_label_count();
}

int Shape::edge_index(const Edge& e) const {
    auto it = edge_index_.find(e);
    if (it == edge_index_.end()) {
        throw DomainError("no edge " + edge_to_string(e));
    }
    return it->second;
}

std::vector<char> Shape::span_edges(
    const std::vector<int>& target_vertices) const {
    std::vector<char> in_span(edges_.size(), 0);
    if (target_vertices.size() <= 1) return in_span;
    std::set<int> targets(target_vertices.begin(), target_vertices.end());
    const int total = static_cast<int>(targets.size());
    if (total <= 1) return in_span;

    // An edge lies in the spanning subtree iff both of its sides contain a
    // target. Count targets per subtree with one DFS from any target.
    const int root = *targets.begin();
    std::map<int, int> below;
    std::function<int(int, int)> dfs = [&](int v, int parent) {
        int count = targets.count(v) ? 1 : 0;
        for (int w : neighbors(v)) {
            if (w == parent) continue;
            const int c = dfs(w, v);
            if (c > 0 && c < total) in_span[edge_index_.at(Edge(v, w))] = 1;
            count += c;
        }
        return count;
    };
    dfs(root, -1);
    return in_span;
}

std::pair<int, int> Shape::label_split(const Edge& e) const {
    if (!edge_index_.count(e)) throw DomainError("no edge " + edge_to_string(e));
    int u_side = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        if (vertex_to_label_.count(v)) ++u_side;
        for (int w : neighbors(v)) {
            if (w == parent || (v == e.u && w == e.v)) continue;
            dfs(w, v);
        }
    };
    dfs(e.u, -1);
    return {u_side, n_labels() - u_side};
}

std::pair<int, int> Shape::leaf_split(const Edge& e) const {
    if (!edge_index_.count(e)) throw DomainError("no edge " + edge_to_string(e));
    int u_side = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        if (is_leaf(v)) ++u_side;
        for (int w : neighbors(v)) {
            if (w == parent || (v == e.u && w == e.v)) continue;
            dfs(w, v);
        }
    };
    dfs(e.u, -1);
    return {u_side, leaf_count() - u_side};
}

std::vector<int> Shape::centers() const {
    std::map<int, int> deg;
    for (int v : vertices_) deg[v] = degree(v);
    std::vector<int> layer;
    for (int v : vertices_) {
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = static_cast<int>(vertices_.size());
    std::vector<int> current = layer;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : current) {
            --remaining;
            for (int w : neighbors(v)) {
                if (--deg[w] == 1) next.push_back(w);
            }
            deg[v] = 0;
        }
        current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    return current;
}

std::string Shape::encode_rooted(
    int root, const std::vector<std::string>* edge_tags) const {
    std::function<std::string(int, int)> enc = [&](int v, int parent) {
        std::vector<std::string> parts;
        for (int w : neighbors(v)) {
            if (w == parent) continue;
            std::string tag;
            if (edge_tags != nullptr) {
                tag = "[" + (*edge_tags)[edge_index_.at(Edge(v, w))] + "]";
            }
            parts.push_back(tag + enc(w, v));
        }
        std::sort(parts.begin(), parts.end());
        auto label = label_of(v);
        std::string out = "(";
        out += label ? "L" + std::to_string(*label) : "*";
        for (const auto& p : parts) out += p;
        out += ")";
        return out;
    };
    return enc(root, -1);
}

std::string Shape::canonical_string(
    const std::vector<std::string>* edge_tags) const {
    std::string best;
    for (int c : centers()) {
        std::string enc = encode_rooted(c, edge_tags);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

}  // namespace detail
}  // namespace treeweights
