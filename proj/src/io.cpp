#include "treeweights/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace treeweights {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

ordered_json labels_to_json(const std::map<int, int>& labels) {
    ordered_json out = ordered_json::object();
    for (const auto& [label, vertex] : labels) {
        out[std::to_string(label)] = vertex;
    }
    return out;
}

std::map<int, int> labels_from_json(const ordered_json& j) {
    if (!j.is_object()) throw ParseError("'labels' must be an object");
    std::map<int, int> labels;
    for (const auto& [key, value] : j.items()) {
        int label = 0;
        try {
            std::size_t pos = 0;
            label = std::stoi(key, &pos);
            if (pos != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ParseError("label key '" + key + "' is not an integer");
        }
        if (!value.is_number_integer()) {
            throw ParseError("label '" + key + "' must map to a vertex id");
        }
        labels[label] = value.get<int>();
    }
    return labels;
}

std::vector<int> vertices_from_json(const ordered_json& j) {
    if (!j.is_array()) throw ParseError("'vertices' must be an array");
    std::vector<int> vertices;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("vertex ids must be integers");
        vertices.push_back(v.get<int>());
    }
    return vertices;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize_tree(const WeightedTree& tree) {
    ordered_json doc;
    doc["vertices"] = tree.vertices();
    ordered_json edges = ordered_json::array();
    for (const Edge& e : tree.edges()) {
        edges.push_back({e.u, e.v, format_rational(tree.weight(e))});
    }
    doc["edges"] = std::move(edges);
    doc["labels"] = labels_to_json(tree.labels());
    return dump(doc);
}

WeightedTree parse_tree(const std::string& text) {
    const ordered_json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("edges") || !doc.contains("labels")) {
        throw ParseError("tree document needs 'edges' and 'labels'");
    }
    std::vector<int> vertices;
    if (doc.contains("vertices")) vertices = vertices_from_json(doc["vertices"]);
    if (!doc["edges"].is_array()) throw ParseError("'edges' must be an array");
    std::map<Edge, Rational> weights;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 3 ||
            !item[0].is_number_integer() || !item[1].is_number_integer() ||
            !item[2].is_string()) {
            throw ParseError("each edge must be [u, v, \"weight\"]");
        }
        const Edge e(item[0].get<int>(), item[1].get<int>());
        if (!weights.emplace(e, parse_rational(item[2].get<std::string>())).second) {
            throw ParseError("duplicate edge " + edge_to_string(e));
        }
    }
    try {
        return WeightedTree(std::move(vertices), std::move(weights),
                            labels_from_json(doc["labels"]));
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid tree: ") + e.what());
    }
}

std::string serialize_family(const WeightFamily& fam) {
    ordered_json doc;
    doc["n"] = fam.n();
    doc["k"] = fam.k();
    ordered_json weights = ordered_json::object();
    for (const auto& [subset, value] : fam.entries()) {
        weights[subset.key()] = format_rational(value);
    }
    doc["weights"] = std::move(weights);
    return dump(doc);
}

WeightFamily parse_family(const std::string& text) {
    const ordered_json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("k") ||
        !doc.contains("weights")) {
        throw ParseError("family document needs 'n', 'k' and 'weights'");
    }
    if (!doc["n"].is_number_integer() || !doc["k"].is_number_integer()) {
        throw ParseError("'n' and 'k' must be integers");
    }
    if (!doc["weights"].is_object()) throw ParseError("'weights' must be an object");
    std::map<LabelSubset, Rational> entries;
    for (const auto& [key, value] : doc["weights"].items()) {
        if (!value.is_string()) {
            throw ParseError("weight for {" + key + "} must be a fraction string");
        }
        entries.emplace(LabelSubset::from_key(key),
                        parse_rational(value.get<std::string>()));
    }
    try {
        return WeightFamily(doc["n"].get<int>(), doc["k"].get<int>(),
                            std::move(entries));
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid family: ") + e.what());
    }
}

std::string serialize_topology(const Topology& topo) {
    ordered_json doc;
    doc["vertices"] = topo.vertices();
    ordered_json edges = ordered_json::array();
    for (const Edge& e : topo.edges()) edges.push_back({e.u, e.v});
    doc["edges"] = std::move(edges);
    doc["labels"] = labels_to_json(topo.labels());
    return dump(doc);
}

Topology parse_topology(const std::string& text) {
    const ordered_json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("edges") || !doc.contains("labels")) {
        throw ParseError("topology document needs 'edges' and 'labels'");
    }
    std::vector<int> vertices;
    if (doc.contains("vertices")) vertices = vertices_from_json(doc["vertices"]);
    if (!doc["edges"].is_array()) throw ParseError("'edges' must be an array");
    std::vector<Edge> edges;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() < 2 || item.size() > 3 ||
            !item[0].is_number_integer() || !item[1].is_number_integer()) {
            throw ParseError("each edge must be [u, v] or [u, v, \"weight\"]");
        }
        edges.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    if (vertices.empty()) {
        for (const Edge& e : edges) {
            vertices.push_back(e.u);
            vertices.push_back(e.v);
        }
    }
    try {
        return Topology(std::move(vertices), std::move(edges),
                        labels_from_json(doc["labels"]));
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid topology: ") + e.what());
    }
}

std::string serialize_simplex(const SimplexDescription& desc, const Topology& topo) {
    ordered_json doc;
    switch (desc.kind) {
        case SimplexKind::OpenSumBound: doc["kind"] = "open_sum_bound"; break;
        case SimplexKind::SumEquality: doc["kind"] = "sum_equality"; break;
        case SimplexKind::Point: doc["kind"] = "point"; break;
        case SimplexKind::Empty: doc["kind"] = "empty"; break;
    }
    doc["dimension"] = desc.dimension;
    if (desc.kind == SimplexKind::Empty) return dump(doc);

    ordered_json coords = ordered_json::array();
    for (const Edge& e : desc.coordinates) coords.push_back({e.u, e.v});
    doc["coordinates"] = std::move(coords);
    if (desc.kind == SimplexKind::OpenSumBound) {
        doc["bound"] = format_rational(desc.bound);
    }
    if (desc.kind == SimplexKind::SumEquality) {
        doc["total"] = format_rational(desc.total);
    }
    ordered_json alpha = ordered_json::object();
    for (const auto& [label, value] : desc.twig_alpha) {
        alpha[std::to_string(label)] = format_rational(value);
    }
    doc["twig_alpha"] = std::move(alpha);
    doc["twig_coefficient"] = format_rational(desc.twig_coeff);
    doc["topology"] = ordered_json::parse(serialize_topology(topo));
    return dump(doc);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace treeweights
