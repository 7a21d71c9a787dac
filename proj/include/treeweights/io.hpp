#pragma once

#include <string>

#include "treeweights/family.hpp"
#include "treeweights/reconstruct.hpp"
#include "treeweights/topology.hpp"
#include "treeweights/tree.hpp"

namespace treeweights {

// Canonical JSON documents; serialization is deterministic and
// parse(serialize(x)) is the identity. Weights are exact fraction strings.

std::string serialize_tree(const WeightedTree& tree);
WeightedTree parse_tree(const std::string& text);

std::string serialize_family(const WeightFamily& fam);
WeightFamily parse_family(const std::string& text);

std::string serialize_topology(const Topology& topo);
// Accepts a topology document or a tree document (weights ignored).
Topology parse_topology(const std::string& text);

std::string serialize_simplex(const SimplexDescription& desc, const Topology& topo);

std::string read_file(const std::string& path);

}  // namespace treeweights
