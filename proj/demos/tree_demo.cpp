// Builds the ordinarization tree of a small genus, prints its level profile
// and one root-to-leaf chain, then dumps DOT for graphviz.
//
//   ./tree_demo [genus]   (default 7)

#include <cstdlib>
#include <iostream>

#include "nsemi/ordinarization.hpp"
#include "nsemi/tree_export.hpp"

int main(int argc, char** argv) {
  int64_t g = argc > 1 ? std::atoll(argv[1]) : 7;
  nsemi::ord::OrdinarizationTree tree = nsemi::ord::build_ordinarization_tree(g);

  std::cerr << "genus " << g << ": " << tree.nodes.size() << " semigroups\n";
  for (size_t r = 0; r < tree.level_counts.size(); ++r)
    std::cerr << "  depth " << r << ": " << tree.level_counts[r] << "\n";

  // walk from the last (deepest) node back to the ordinary root
  std::cerr << "chain to the root:\n";
  for (int64_t i = (int64_t)tree.nodes.size() - 1; i >= 0; i = tree.parent[i]) {
    std::cerr << "  " << tree.nodes[i].label() << "  gaps " << tree.nodes[i].gap_string()
              << "\n";
    if (tree.parent[i] < 0) break;
  }

  std::cout << nsemi::tree_to_dot(tree);
  return 0;
}
