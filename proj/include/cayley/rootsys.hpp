#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cayley/linalg.hpp"

namespace cayley {

/// The 48 roots of the rank-4 exceptional system: +-e_i, +-e_i +- e_j, and
/// all (+-e1 +- e2 +- e3 +- e4)/2, with the Bourbaki simple roots.
struct RootSystem {
  std::vector<VecQ> roots;
  std::vector<VecQ> simple_roots;  // e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2
  VecQ highest_root;               // e1+e2
};

const RootSystem& f4_root_system();

/// Diagram on explicit root vectors; node order is the display order.
struct Diagram {
  std::vector<VecQ> nodes;

  int size() const { return static_cast<int>(nodes.size()); }
  /// Cartan pairing 2<a_i, a_j>/<a_j, a_j>.
  MatQ cartan() const;
  Diagram without_nodes(const std::vector<int>& idx) const;
  Diagram permuted(const std::vector<int>& perm) const;
  std::string ascii() const;
  nlohmann::json to_json() const;
};

/// The 5-node affine diagram: the negative of the highest root attached at
/// the long end, one double edge in the middle. Node 0 is the affine node.
Diagram f4_extended_diagram();

/// Classify the connected components left after deleting the given nodes,
/// against the catalog A1..A4, B2..B4, C3, C4, D4, G2, F4. Sorted names;
/// throws on an unclassifiable component.
std::vector<std::string> delete_nodes(const Diagram& d, const std::vector<int>& idx);

struct BdsEntry {
  int deleted_node;
  std::vector<std::string> types;
};

/// All single deletions of a non-affine node from the extended diagram,
/// deduplicated by the classified type list.
std::vector<BdsEntry> bds_enumerate();

}  // namespace cayley
