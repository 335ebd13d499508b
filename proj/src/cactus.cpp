#include "walkalg/cactus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "walkalg/loop_erasure.hpp"

namespace walkalg {

bool is_cactus(const Walk& w) {
  auto sections = les(w);
  for (std::size_t k = 0; k < w.degree(); ++k)
    for (std::size_t k2 = k + 1; k2 <= w.degree(); ++k2) {
      bool repeats = w[k] == w[k2];
      bool section =
          std::binary_search(sections.begin(), sections.end(), Cut{k, k2});
      if (repeats != section) return false;
    }
  return true;
}

Walk cactus_map(const Walk& w) {
  std::vector<VertexId> out{w[0]};
  VertexId next_label = w[0];
  std::vector<std::size_t> state{0};  // erasure state on the input walk
  std::map<VertexId, std::size_t> last{{w[0], 0}};
  for (std::size_t j = 1; j <= w.degree(); ++j) {
    auto it = std::find_if(state.begin(), state.end(),
                           [&](std::size_t i) { return w[i] == w[j]; });
    if (it == state.end()) {
      out.push_back(++next_label);
      state.push_back(j);
    } else {
      // Repeat arrival: reuse the output label of the latest earlier step
      // that carried this vertex, and let the erasure drop the cycle.
      out.push_back(out[last.at(w[j])]);
      state.resize(static_cast<std::size_t>(it - state.begin()) + 1);
    }
    last[w[j]] = j;
  }
  return Walk(std::move(out));
}

Walk canonical_relabel(const Walk& w) {
  std::map<VertexId, VertexId> rename;
  std::vector<VertexId> out;
  out.reserve(w.num_vertices());
  for (VertexId v : w.vertices()) {
    auto it = rename.try_emplace(v, static_cast<VertexId>(rename.size() + 1))
                  .first;
    out.push_back(it->second);
  }
  return Walk(std::move(out));
}

Forest canonical_relabel(const Forest& f) {
  std::vector<Walk> members;
  members.reserve(f.size());
  for (const Walk& m : f.members()) members.push_back(canonical_relabel(m));
  return Forest(std::move(members));
}

Walk phi(const Walk& w) { return canonical_relabel(cactus_map(w)); }

Forest phi(const Forest& f) {
  std::vector<Walk> members;
  members.reserve(f.size());
  for (const Walk& m : f.members()) members.push_back(phi(m));
  return Forest(std::move(members));
}

MultisetForest phi(const MultisetForest& f) {
  std::vector<Walk> members;
  members.reserve(f.size());
  for (const Walk& m : f.members()) members.push_back(phi(m));
  return MultisetForest(std::move(members));
}

TemporalTree temporal_tree(const Walk& w) {
  TemporalTree tree;
  tree.shape = cactus_map(w);
  tree.root = skeleton(tree.shape);
  auto cycles = replay_cycles(tree.shape);
  for (std::size_t t = 0; t < cycles.size(); ++t) {
    TreeNode node;
    node.section = cycles[t].section;
    node.steps = cycles[t].members;
    node.parent = 0;
    // The parent cycle is the one whose erasure removed this cycle's root
    // step; a root step that survives to the skeleton hangs off node 0.
    std::size_t root_step = cycles[t].root_index();
    for (std::size_t s = t + 1; s < cycles.size(); ++s) {
      const auto& erased = cycles[s].erased;
      if (std::find(erased.begin(), erased.end(), root_step) != erased.end()) {
        node.parent = s + 1;
        break;
      }
    }
    tree.nodes.push_back(std::move(node));
  }
  return tree;
}

namespace {

Walk steps_readout(const Walk& shape, const std::vector<std::size_t>& steps) {
  std::vector<VertexId> labels;
  labels.reserve(steps.size());
  for (std::size_t i : steps) labels.push_back(shape[i]);
  return Walk(std::move(labels));
}

}  // namespace

std::string to_dot(const TemporalTree& t) {
  std::ostringstream out;
  out << "digraph temporal_tree {\n";
  out << "  n0 [label=\"root " << to_string(t.root) << "\" shape=box];\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    out << "  n" << i + 1 << " [label=\"" << i + 1 << ": "
        << to_string(steps_readout(t.shape, t.nodes[i].steps)) << "\"];\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    out << "  n" << i + 1 << " -> n" << t.nodes[i].parent << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

std::set<VertexId> cycle_vertices(const Walk& w, const ErasedCycle& cycle) {
  std::set<VertexId> out;
  for (std::size_t i : cycle.members) out.insert(w[i]);
  return out;
}

}  // namespace

bool is_tower(const Walk& w) {
  if (!w.is_closed()) return false;
  auto cycles = replay_cycles(w);
  if (cycles.empty()) return false;
  std::vector<std::set<VertexId>> vertices;
  vertices.reserve(cycles.size());
  for (const auto& cycle : cycles) vertices.push_back(cycle_vertices(w, cycle));
  for (std::size_t t = 0; t + 1 < cycles.size(); ++t) {
    // Each cycle must be swallowed by the next one through its root step,
    // and the two may share nothing except that root vertex.
    const auto& next_erased = cycles[t + 1].erased;
    std::size_t root_step = cycles[t].root_index();
    if (std::find(next_erased.begin(), next_erased.end(), root_step) ==
        next_erased.end())
      return false;
    std::vector<VertexId> common;
    std::set_intersection(vertices[t].begin(), vertices[t].end(),
                          vertices[t + 1].begin(), vertices[t + 1].end(),
                          std::back_inserter(common));
    if (common != std::vector<VertexId>{w[root_step]}) return false;
  }
  for (std::size_t t = 0; t < cycles.size(); ++t)
    for (std::size_t s = t + 2; s < cycles.size(); ++s) {
      std::vector<VertexId> common;
      std::set_intersection(vertices[t].begin(), vertices[t].end(),
                            vertices[s].begin(), vertices[s].end(),
                            std::back_inserter(common));
      if (!common.empty()) return false;
    }
  return true;
}

std::optional<VertexId> is_corolla(const Walk& w) {
  if (!w.is_closed()) return std::nullopt;
  auto cycles = replay_cycles(w);
  if (cycles.empty()) return std::nullopt;
  for (const auto& cycle : cycles)
    if (cycle.root_index() != 0) return std::nullopt;
  return w[0];
}

LinComb<TensorPair> corolla_coproduct(const Walk& w) {
  if (!is_corolla(w))
    throw std::invalid_argument("corolla_coproduct: not a corolla");
  LinComb<TensorPair> out;
  out.add({Forest::unit(), Forest(w)}, 1);
  out.add({Forest(w), Forest::unit()}, 1);
  auto cycles = replay_cycles(w);
  // Petals tile the step range; splitting after each proper petal boundary
  // reproduces every extended-cut term.
  for (std::size_t t = 0; t + 1 < cycles.size(); ++t) {
    std::size_t close = cycles[t].close_index();
    out.add({Forest(subwalk(w, 0, close)),
             Forest(subwalk(w, close, w.degree()))},
            1);
  }
  return out;
}

}  // namespace walkalg
