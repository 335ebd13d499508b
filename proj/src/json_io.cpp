#include "walkalg/json_io.hpp"

#include <stdexcept>

#include "walkalg/rational.hpp"

namespace walkalg {

using nlohmann::json;

json to_json(const Walk& w) { return json(w.vertices()); }

json to_json(const Cut& c) { return json{{"from", c.from}, {"to", c.to}}; }

namespace {

json members_json(const std::vector<Walk>& members) {
  json out = json::array();
  for (const Walk& m : members) out.push_back(to_json(m));
  return out;
}

template <typename Basis, typename TermFn>
json lincomb_json(const LinComb<Basis>& v, TermFn&& term) {
  json out = json::array();
  for (const auto& [b, c] : v)
    out.push_back(json{{"coeff", to_string(c)}, {"term", term(b)}});
  return out;
}

}  // namespace

json to_json(const Forest& f) { return members_json(f.members()); }

json to_json(const MultisetForest& f) { return members_json(f.members()); }

json to_json(const ErasedCycle& e) {
  return json{{"section", to_json(e.section)},
              {"members", e.members},
              {"erased", e.erased}};
}

json to_json(const TemporalTree& t) {
  json nodes = json::array();
  for (const TreeNode& n : t.nodes)
    nodes.push_back(json{{"section", to_json(n.section)},
                         {"steps", n.steps},
                         {"parent", n.parent}});
  return json{{"shape", to_json(t.shape)},
              {"root", to_json(t.root)},
              {"nodes", nodes}};
}

json to_json(const CheckReport& r) {
  json failures = json::array();
  for (const CheckFailure& f : r.failures)
    failures.push_back(json{{"index", f.index},
                            {"input", f.input},
                            {"identity", f.identity},
                            {"lhs", f.lhs},
                            {"rhs", f.rhs}});
  return json{{"suite", r.suite},
              {"checked", r.checked},
              {"seed", r.seed},
              {"elapsed_ms", r.elapsed_ms},
              {"ok", r.ok()},
              {"failures", failures}};
}

json to_json(const LinComb<Forest>& v) {
  return lincomb_json(v, [](const Forest& f) { return to_json(f); });
}

json to_json(const LinComb<MultisetForest>& v) {
  return lincomb_json(v, [](const MultisetForest& f) { return to_json(f); });
}

json to_json(const LinComb<TensorPair>& v) {
  return lincomb_json(v, [](const TensorPair& t) {
    return json{{"factors", json::array({to_json(t.first), to_json(t.second)})}};
  });
}

json to_json(const LinComb<SymTensorPair>& v) {
  return lincomb_json(v, [](const SymTensorPair& t) {
    return json{{"factors", json::array({to_json(t.first), to_json(t.second)})}};
  });
}

json to_json(const LinComb<WalkPair>& v) {
  return lincomb_json(v, [](const WalkPair& t) {
    return json{{"factors", json::array({to_json(t.first), to_json(t.second)})}};
  });
}

json to_json(const LinComb<WalkCutPair>& v) {
  return lincomb_json(v, [](const WalkCutPair& t) {
    return json{{"factors", json::array({to_json(t.first), to_json(t.second)})}};
  });
}

Digraph digraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs"))
    throw std::invalid_argument(
        "digraph: expected {\"vertices\":[...],\"arcs\":[[u,v],...]}");
  Digraph g;
  if (!j["vertices"].is_array())
    throw std::invalid_argument("digraph: vertices must be an array");
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer())
      throw std::invalid_argument("digraph: vertex labels must be integers");
    g.vertices.insert(v.get<VertexId>());
  }
  if (!j["arcs"].is_array())
    throw std::invalid_argument("digraph: arcs must be an array");
  for (const auto& arc : j["arcs"]) {
    if (!arc.is_array() || arc.size() != 2 || !arc[0].is_number_integer() ||
        !arc[1].is_number_integer())
      throw std::invalid_argument("digraph: each arc must be a pair [u,v]");
    VertexId u = arc[0].get<VertexId>();
    VertexId v = arc[1].get<VertexId>();
    if (!g.vertices.count(u) || !g.vertices.count(v))
      throw std::invalid_argument("digraph: arc names an unlisted vertex");
    g.arcs.insert({u, v});
  }
  return g;
}

}  // namespace walkalg
