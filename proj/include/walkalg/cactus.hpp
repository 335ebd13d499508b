#ifndef WALKALG_CACTUS_HPP
#define WALKALG_CACTUS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "walkalg/forest.hpp"
#include "walkalg/lincomb.hpp"
#include "walkalg/walk.hpp"

namespace walkalg {

// A walk is a cactus walk when a vertex repeats at steps k < k' exactly
// when (k,k') is a loop-erased section. Self-avoiding walks are cacti;
// a closed cactus traces a tree of simple cycles.
bool is_cactus(const Walk& w);

// Projection onto cactus walks. A fresh vertex gets a label one above the
// largest label used so far, a repeat arrival gets the label of its
// latest earlier visit. The image is always a cactus walk with the same
// loop-erased sections; canonically labelled cactus walks are fixed.
Walk cactus_map(const Walk& w);

// Rename vertices to 1,2,3,... in order of first visit. The forest
// overload relabels each member independently.
Walk canonical_relabel(const Walk& w);
Forest canonical_relabel(const Forest& f);

// Quotient map: canonically labelled cactus shape, cactus_map followed by
// canonical_relabel. Forest and multiset overloads apply it memberwise.
Walk phi(const Walk& w);
Forest phi(const Forest& f);
MultisetForest phi(const MultisetForest& f);

// One erased simple cycle of the cactus shape, as a tree node.
struct TreeNode {
  // Section endpoints, as step indices into the cactus shape.
  Cut section;
  // All step indices of the cycle in the cactus shape, ascending; the
  // first is the cycle's root step, the last closes the cycle.
  std::vector<std::size_t> steps;
  // 0 for a child of the skeleton root, else the 1-based id of the cycle
  // whose erasure removed this cycle's root step.
  std::size_t parent = 0;
};

// Rooted tree of the erased simple cycles of the cactus shape of a walk,
// in erasure order: node id t (1-based) is the t-th erased cycle, id 0 is
// the skeleton root.
struct TemporalTree {
  Walk shape;                   // cactus shape the tree was read from
  Walk root;                    // loop-erased skeleton of the shape
  std::vector<TreeNode> nodes;  // erasure order

  std::size_t node_count() const { return nodes.size(); }

  TemporalTree() : shape(Walk::trivial(0)), root(Walk::trivial(0)) {}
};

TemporalTree temporal_tree(const Walk& w);

// Graphviz rendering: node ids by erasure rank, each cycle labelled with
// its vertex readout, edges child -> parent.
std::string to_dot(const TemporalTree& t);

// A tower: closed walk with at least one cycle and trivial skeleton whose
// cycles stack root-on-previous-cycle. Consecutive erased cycles share
// exactly the earlier cycle's root vertex, with that root step erased as
// an interior member of the next cycle; non-consecutive cycles are
// vertex-disjoint.
bool is_tower(const Walk& w);

// A corolla: closed walk with at least one cycle in which every erased
// cycle is rooted at step 0. Returns the shared root vertex, or nullopt.
std::optional<VertexId> is_corolla(const Walk& w);

// Coproduct of a corolla by splitting its petal word: the two unit terms
// plus one term per proper petal boundary. Agrees with delta_h. Throws
// std::invalid_argument when the walk is not a corolla.
LinComb<TensorPair> corolla_coproduct(const Walk& w);

}  // namespace walkalg

#endif  // WALKALG_CACTUS_HPP
