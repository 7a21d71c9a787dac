#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treeweights/io.hpp"
#include "treeweights/multiweight.hpp"
#include "treeweights/oracle.hpp"
#include "treeweights/reconstruct.hpp"

namespace tw = treeweights;

namespace {

std::vector<tw::Rational> parse_coords(const std::string& csv) {
    std::vector<tw::Rational> coords;
    if (csv.empty()) return coords;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = csv.find(',', start);
        const std::string token = csv.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        coords.push_back(tw::parse_rational(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return coords;
}

tw::Edge parse_edge_arg(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw tw::ParseError("edge must be given as 'u,v'");
    }
    try {
        return tw::Edge(std::stoi(text.substr(0, comma)),
                        std::stoi(text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw tw::ParseError("edge must be given as 'u,v'");
    }
}

std::string classification_report(const tw::WeightFamily& fam) {
    const tw::FamilyClass cls = tw::classify_family(fam);
    std::string status;
    switch (cls.status) {
        case tw::FamilyStatus::AllStrict: status = "all_strict"; break;
        case tw::FamilyStatus::OneEquality: status = "one_equality"; break;
        case tw::FamilyStatus::Violation: status = "violation"; break;
    }
    std::string out = "{\n  \"status\": \"" + status + "\",\n";
    out += "  \"M\": " + std::to_string(cls.m_max) + ",\n";
    out += "  \"sorted_labels\": [";
    for (std::size_t i = 0; i < cls.sorted_labels.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(cls.sorted_labels[i]);
    }
    out += "],\n";
    if (cls.status == tw::FamilyStatus::OneEquality) {
        out += "  \"c\": " + std::to_string(cls.equality_label) + ",\n";
    }
    if (cls.status == tw::FamilyStatus::Violation) {
        out += "  \"witnesses\": [";
        for (std::size_t i = 0; i < cls.witnesses.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(cls.witnesses[i]);
        }
        out += "],\n";
    }
    out += std::string("  \"treelike\": ") +
           (cls.status != tw::FamilyStatus::Violation ? "true" : "false") + "\n}\n";
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact k-weights of positive-weighted labeled trees: "
                 "computation, treelikeness checks, reconstruction and moduli"};
    app.require_subcommand(1);

    std::string tree_path, family_path, topology_path;
    std::string coords_arg, subset_arg, direction, contract_arg, split_arg;
    int k = 0, r = 1, n = 0, nonleaf = -1;

    auto* kweights = app.add_subcommand("kweights", "All size-k weights of a tree");
    kweights->add_option("--tree", tree_path)->required();
    kweights->add_option("--k", k)->required();

    auto* check = app.add_subcommand("check", "Classify a weight family");
    check->add_option("--family", family_path)->required();

    auto* reconstruct = app.add_subcommand(
        "reconstruct", "Build a realizing tree from a family");
    reconstruct->add_option("--family", family_path)->required();
    reconstruct->add_option("--topology", topology_path);
    reconstruct->add_option("--coords", coords_arg);

    auto* moduli = app.add_subcommand(
        "moduli", "Moduli simplex of positive weights on a topology");
    moduli->add_option("--family", family_path)->required();
    moduli->add_option("--topology", topology_path)->required();

    auto* convert = app.add_subcommand(
        "convert", "Correspondence between (n-1)-weights and 2-weights");
    convert->add_option("--family", family_path)->required();
    convert->add_option("--direction", direction)
        ->required()
        ->check(CLI::IsMember({"nm1-to-2", "2-to-nm1"}));

    auto* extend = app.add_subcommand(
        "extend", "Forced 2-weights on a distinguished (k+1)-subset");
    extend->add_option("--family", family_path)->required();
    extend->add_option("--subset", subset_arg)->required();

    auto* op = app.add_subcommand("op", "r-IO / r-OI rewrites");
    op->add_option("--tree", tree_path)->required();
    op->add_option("--contract", contract_arg);
    op->add_option("--split", split_arg);
    op->add_option("--r", r);

    auto* topologies = app.add_subcommand(
        "topologies", "Enumerate reduced labeled topologies");
    topologies->add_option("--n", n)->required();
    topologies->add_option("--nonleaf", nonleaf);

    auto* oracle = app.add_subcommand("oracle", "Brute-force k-weight");
    oracle->add_option("--tree", tree_path)->required();
    oracle->add_option("--subset", subset_arg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (kweights->parsed()) {
        const auto tree = tw::parse_tree(tw::read_file(tree_path));
        std::cout << tw::serialize_family(tw::all_k_weights(tree, k));
        return 0;
    }
    if (check->parsed()) {
        const auto fam = tw::parse_family(tw::read_file(family_path));
        if (fam.k() == fam.n() - 1 && fam.n() >= 3) {
            std::cout << classification_report(fam);
        } else if (fam.k() == 2) {
            const bool ok = tw::check_four_point(fam);
            std::cout << "{\n  \"status\": \""
                      << (ok ? "treelike" : "not_treelike") << "\"\n}\n";
        } else {
            throw tw::DomainError(
                "no decision procedure for k = " + std::to_string(fam.k()) +
                " with n = " + std::to_string(fam.n()));
        }
        return 0;
    }
    if (reconstruct->parsed()) {
        const auto fam = tw::parse_family(tw::read_file(family_path));
        if (fam.k() == 2 && fam.k() != fam.n() - 1) {
            std::cout << tw::serialize_tree(tw::reconstruct_from_two_weights(fam));
            return 0;
        }
        if (fam.k() != fam.n() - 1) {
            throw tw::DomainError("reconstruction needs k = 2 or k = n - 1");
        }
        const tw::FamilyClass cls = tw::classify_family(fam);
        if (cls.status == tw::FamilyStatus::Violation) {
            throw tw::DomainError("family is not positive-treelike");
        }
        if (!topology_path.empty()) {
            const auto topo = tw::parse_topology(tw::read_file(topology_path));
            std::cout << tw::serialize_tree(
                tw::realize_on_topology(fam, topo, parse_coords(coords_arg)));
            return 0;
        }
        if (cls.status == tw::FamilyStatus::OneEquality) {
            std::cout << tw::serialize_tree(tw::reconstruct_equality_star(fam));
        } else if (fam.n() == 3 && fam.k() == 2) {
            std::cout << tw::serialize_tree(tw::reconstruct_from_two_weights(fam));
        } else {
            std::cout << tw::serialize_tree(tw::canonical_pseudostar(fam));
        }
        return 0;
    }
    if (moduli->parsed()) {
        const auto fam = tw::parse_family(tw::read_file(family_path));
        const auto topo = tw::parse_topology(tw::read_file(topology_path));
        std::cout << tw::serialize_simplex(tw::moduli_description(fam, topo), topo);
        return 0;
    }
    if (convert->parsed()) {
        const auto fam = tw::parse_family(tw::read_file(family_path));
        const tw::Correspondence corr = direction == "nm1-to-2"
                                            ? tw::nm1_to_two(fam)
                                            : tw::two_to_nm1(fam);
        std::cout << tw::serialize_family(direction == "nm1-to-2"
                                              ? corr.family_two
                                              : corr.family_nm1);
        return 0;
    }
    if (extend->parsed()) {
        const auto fam = tw::parse_family(tw::read_file(family_path));
        const auto mixed =
            tw::extend_family(fam, tw::LabelSubset::from_key(subset_arg));
        std::cout << "{\n  \"subset\": \"" << mixed.subset.key() << "\",\n"
                  << "  \"distinguished\": " << mixed.distinguished << ",\n"
                  << "  \"extra_two_weights\": {";
        bool first = true;
        for (const auto& [pair, value] : mixed.extra_two_weights) {
            std::cout << (first ? "" : ",") << "\n    \"" << pair.key()
                      << "\": \"" << tw::format_rational(value) << "\"";
            first = false;
        }
        std::cout << "\n  }\n}\n";
        return 0;
    }
    if (op->parsed()) {
        const auto tree = tw::parse_tree(tw::read_file(tree_path));
        if (!contract_arg.empty() == !split_arg.empty()) {
            throw tw::DomainError("give exactly one of --contract or --split");
        }
        if (!contract_arg.empty()) {
            std::cout << tw::serialize_tree(
                tw::r_io(tree, parse_edge_arg(contract_arg), r));
            return 0;
        }
        // --split "vertex;u1,u2,...;y": move the edges (vertex,u_i) to the
        // new vertex and join with an edge of weight y.
        const std::size_t p1 = split_arg.find(';');
        const std::size_t p2 = split_arg.find(';', p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos) {
            throw tw::ParseError("--split expects 'vertex;u1,u2,...;weight'");
        }
        int vertex = 0;
        try {
            vertex = std::stoi(split_arg.substr(0, p1));
        } catch (const std::exception&) {
            throw tw::ParseError("--split expects 'vertex;u1,u2,...;weight'");
        }
        std::vector<tw::Edge> moved;
        for (const auto& r_coord :
             parse_coords(split_arg.substr(p1 + 1, p2 - p1 - 1))) {
            if (denominator(r_coord) != 1) {
                throw tw::ParseError("moved endpoints must be integers");
            }
            moved.emplace_back(vertex, static_cast<int>(numerator(r_coord)));
        }
        const tw::Rational y = tw::parse_rational(split_arg.substr(p2 + 1));
        std::cout << tw::serialize_tree(tw::r_oi(tree, vertex, moved, y, r));
        return 0;
    }
    if (topologies->parsed()) {
        const auto constraint = nonleaf < 0 ? tw::TopologyConstraint::LeafOnly
                                            : tw::TopologyConstraint::ExactNonLeafLabels;
        const auto catalog =
            tw::enumerate_topologies(n, constraint, nonleaf < 0 ? 0 : nonleaf);
        std::cout << "{\n  \"n\": " << n << ",\n  \"count\": "
                  << catalog.items.size() << ",\n  \"items\": [";
        bool first = true;
        for (const auto& topo : catalog.items) {
            std::string doc = tw::serialize_topology(topo);
            doc.pop_back();  // trailing newline
            std::string indented;
            for (char c : doc) {
                indented += c;
                if (c == '\n') indented += "    ";
            }
            std::cout << (first ? "" : ",") << "\n    " << indented;
            first = false;
        }
        std::cout << "\n  ]\n}\n";
        return 0;
    }
    if (oracle->parsed()) {
        const auto tree = tw::parse_tree(tw::read_file(tree_path));
        const auto subset = tw::LabelSubset::from_key(subset_arg);
        std::cout << "{\n  \"subset\": \"" << subset.key() << "\",\n  \"weight\": \""
                  << tw::format_rational(tw::brute_force_k_weight(tree, subset))
                  << "\"\n}\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tw::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tw::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
