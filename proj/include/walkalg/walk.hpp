#ifndef WALKALG_WALK_HPP
#define WALKALG_WALK_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace walkalg {

using VertexId = std::int64_t;

// A walk is a nonempty sequence of vertices w_0 ... w_l traversed in order.
// Its degree is the number of steps l; a single vertex is the trivial walk
// of degree 0. Value type, ordered by (degree, vertex sequence).
class Walk {
 public:
  explicit Walk(std::vector<VertexId> vertices);
  static Walk trivial(VertexId v) { return Walk({v}); }

  std::size_t degree() const { return vertices_.size() - 1; }
  std::size_t num_vertices() const { return vertices_.size(); }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  VertexId start() const { return vertices_.front(); }
  VertexId end() const { return vertices_.back(); }
  bool is_closed() const { return start() == end(); }
  bool is_trivial() const { return degree() == 0; }
  const std::vector<VertexId>& vertices() const { return vertices_; }

  // Set of distinct vertex labels visited.
  std::set<VertexId> vertex_set() const;

  friend std::strong_ordering operator<=>(const Walk& a, const Walk& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.vertices_ <=> b.vertices_;
  }
  friend bool operator==(const Walk& a, const Walk& b) = default;

 private:
  std::vector<VertexId> vertices_;
};

enum class WalkClass { SelfAvoidingWalk, SelfAvoidingPolygon, Other };

// SelfAvoidingWalk: all vertices distinct (trivial walks included).
// SelfAvoidingPolygon: closed, degree >= 1, w_0 ... w_{l-1} distinct.
WalkClass classify(const Walk& w);
std::string to_string(WalkClass c);

// A closed section of a walk in original step coordinates:
// 0 <= from < to <= degree and w_from == w_to once validated against a walk.
struct Cut {
  std::size_t from = 0;
  std::size_t to = 0;

  friend auto operator<=>(const Cut&, const Cut&) = default;
};

// Contiguous subwalk w_from ... w_to. Requires from <= to <= degree.
Walk subwalk(const Walk& w, std::size_t from, std::size_t to);
Walk subwalk(const Walk& w, const Cut& c);

// Walk composition: follows a to its end, then b. Requires a.end()==b.start().
Walk concat(const Walk& a, const Walk& b);

// Removes the interiors of the given sections from w, keeping each w_from.
// The cuts must be valid closed sections of w, sorted by position, and
// pairwise non-overlapping (c[i].to < c[i+1].from). Throws on violations.
Walk remainder(const Walk& w, const std::vector<Cut>& cuts);
Walk remainder(const Walk& w, const Cut& c);

// A directed graph given by an explicit vertex set and arc set.
struct Digraph {
  std::set<VertexId> vertices;
  std::set<std::pair<VertexId, VertexId>> arcs;
};

// True iff every vertex of w belongs to g and every step is an arc of g.
bool validate_on_graph(const Walk& w, const Digraph& g);

// Compact rendering for diagnostics: "12324522" when all labels are single
// digits, "10-11-12" otherwise.
std::string to_string(const Walk& w);

}  // namespace walkalg

#endif  // WALKALG_WALK_HPP
