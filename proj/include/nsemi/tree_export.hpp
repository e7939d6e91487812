#pragma once

// DOT and JSON serialization of ordinarization trees.  Output is
// deterministic byte-for-byte: node ids are the tree's breadth-first order
// and JSON object keys are emitted sorted.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsemi/errors.hpp"
#include "nsemi/ordinarization.hpp"

namespace nsemi {

// Directed graph with edges child -> parent; root drawn leftmost.
inline std::string tree_to_dot(const ord::OrdinarizationTree& tree) {
  std::ostringstream os;
  os << "digraph ordinarization_tree_g" << tree.genus << " {\n";
  os << "  rankdir=RL;\n";
  os << "  node [shape=box, fontsize=10];\n";
  for (size_t i = 0; i < tree.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << tree.nodes[i].gap_string() << "\"];\n";
  for (size_t i = 0; i < tree.nodes.size(); ++i)
    if (tree.parent[i] >= 0) os << "  n" << i << " -> n" << tree.parent[i] << ";\n";
  os << "}\n";
  return os.str();
}

inline nlohmann::json tree_to_json(const ord::OrdinarizationTree& tree) {
  nlohmann::json nodes = nlohmann::json::array();
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    const NumericalSemigroup& s = tree.nodes[i];
    GeneratorData gd = s.minimal_generators();
    nlohmann::json node;
    node["id"] = i;
    node["gaps"] = s.gaps();
    if (tree.parent[i] >= 0)
      node["parent"] = tree.parent[i];
    else
      node["parent"] = nullptr;
    node["depth"] = tree.depth[i];
    node["h"] = gd.effective.size();
    node["min_gens"] = gd.minimal;
    nodes.push_back(std::move(node));
  }
  nlohmann::json out;
  out["genus"] = tree.genus;
  out["nodes"] = std::move(nodes);
  return out;
}

inline std::string tree_to_json_text(const ord::OrdinarizationTree& tree) {
  return tree_to_json(tree).dump(2) + "\n";
}

// Inverse of tree_to_json; validates linkage, depths and generator data.
inline ord::OrdinarizationTree tree_from_json(const nlohmann::json& doc) {
  if (!doc.contains("genus") || !doc.contains("nodes"))
    throw IoError("tree_from_json: missing genus/nodes");
  ord::OrdinarizationTree tree;
  tree.genus = doc["genus"].get<int64_t>();
  const auto& nodes = doc["nodes"];
  tree.children.resize(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (node["id"].get<size_t>() != i)
      throw IoError("tree_from_json: node ids must be 0..n-1 in order");
    std::vector<int64_t> gap_list = node["gaps"].get<std::vector<int64_t>>();
    NumericalSemigroup s = NumericalSemigroup::from_gaps(gap_list);
    if (s.genus() != tree.genus) throw IoError("tree_from_json: node genus mismatch");
    GeneratorData gd = s.minimal_generators();
    if (node.contains("min_gens") && node["min_gens"].get<std::vector<int64_t>>() != gd.minimal)
      throw IoError("tree_from_json: minimal generators disagree with gap set");
    if (node.contains("h") && node["h"].get<int64_t>() != (int64_t)gd.effective.size())
      throw IoError("tree_from_json: effectivity disagrees with gap set");
    int64_t parent = node["parent"].is_null() ? -1 : node["parent"].get<int64_t>();
    int64_t depth = node["depth"].get<int64_t>();
    if (parent < 0 ? depth != 0 : (parent >= (int64_t)i || depth < 1))
      throw IoError("tree_from_json: bad parent/depth linkage");
    tree.nodes.push_back(std::move(s));
    tree.parent.push_back(parent);
    tree.depth.push_back(depth);
    if (parent >= 0) {
      if (tree.depth[parent] + 1 != depth)
        throw IoError("tree_from_json: depth must increase by one along edges");
      tree.children[parent].push_back((int64_t)i);
    }
    if ((int64_t)tree.level_counts.size() <= depth) tree.level_counts.resize(depth + 1, 0);
    ++tree.level_counts[depth];
  }
  return tree;
}

inline ord::OrdinarizationTree tree_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("tree_from_json: ") + e.what());
  }
  return tree_from_json(doc);
}

}  // namespace nsemi
