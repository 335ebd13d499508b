#include "walkalg/walk.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace walkalg {

Walk::Walk(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty())
    throw std::invalid_argument("walk needs at least one vertex");
}

std::set<VertexId> Walk::vertex_set() const {
  return std::set<VertexId>(vertices_.begin(), vertices_.end());
}

WalkClass classify(const Walk& w) {
  const auto& v = w.vertices();
  std::set<VertexId> seen(v.begin(), v.end());
  if (seen.size() == v.size()) return WalkClass::SelfAvoidingWalk;
  if (w.is_closed() && seen.size() == v.size() - 1) {
    // Closed with exactly one repeat; the repeat must be the endpoints.
    std::set<VertexId> interior(v.begin(), v.end() - 1);
    if (interior.size() == v.size() - 1) return WalkClass::SelfAvoidingPolygon;
  }
  return WalkClass::Other;
}

std::string to_string(WalkClass c) {
  switch (c) {
    case WalkClass::SelfAvoidingWalk:
      return "self-avoiding-walk";
    case WalkClass::SelfAvoidingPolygon:
      return "self-avoiding-polygon";
    default:
      return "other";
  }
}

Walk subwalk(const Walk& w, std::size_t from, std::size_t to) {
  if (from > to || to > w.degree())
    throw std::out_of_range("subwalk range outside the walk");
  const auto& v = w.vertices();
  return Walk(std::vector<VertexId>(v.begin() + static_cast<std::ptrdiff_t>(from),
                                    v.begin() + static_cast<std::ptrdiff_t>(to) + 1));
}

Walk subwalk(const Walk& w, const Cut& c) { return subwalk(w, c.from, c.to); }

Walk concat(const Walk& a, const Walk& b) {
  if (a.end() != b.start())
    throw std::invalid_argument("concat needs matching endpoint vertices");
  std::vector<VertexId> v = a.vertices();
  v.insert(v.end(), b.vertices().begin() + 1, b.vertices().end());
  return Walk(std::move(v));
}

Walk remainder(const Walk& w, const std::vector<Cut>& cuts) {
  std::size_t prev_to = 0;
  bool first = true;
  for (const Cut& c : cuts) {
    if (c.from >= c.to || c.to > w.degree())
      throw std::invalid_argument("cut is not a section of the walk");
    if (w[c.from] != w[c.to])
      throw std::invalid_argument("cut endpoints carry different vertices");
    if (!first && c.from <= prev_to)
      throw std::invalid_argument("cuts overlap or are out of order");
    prev_to = c.to;
    first = false;
  }
  std::vector<VertexId> v;
  v.reserve(w.num_vertices());
  std::size_t i = 0;
  for (const Cut& c : cuts) {
    for (; i <= c.from; ++i) v.push_back(w[i]);
    i = c.to + 1;  // skip the interior and the closing repeat
  }
  for (; i < w.num_vertices(); ++i) v.push_back(w[i]);
  return Walk(std::move(v));
}

Walk remainder(const Walk& w, const Cut& c) {
  return remainder(w, std::vector<Cut>{c});
}

bool validate_on_graph(const Walk& w, const Digraph& g) {
  for (VertexId v : w.vertices())
    if (!g.vertices.count(v)) return false;
  for (std::size_t i = 0; i + 1 < w.num_vertices(); ++i)
    if (!g.arcs.count({w[i], w[i + 1]})) return false;
  return true;
}

std::string to_string(const Walk& w) {
  bool compact = std::all_of(w.vertices().begin(), w.vertices().end(),
                             [](VertexId v) { return v >= 0 && v <= 9; });
  std::ostringstream out;
  for (std::size_t i = 0; i < w.num_vertices(); ++i) {
    if (!compact && i > 0) out << '-';
    out << w[i];
  }
  return out.str();
}

}  // namespace walkalg
