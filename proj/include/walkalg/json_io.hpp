#ifndef WALKALG_JSON_IO_HPP
#define WALKALG_JSON_IO_HPP

#include <json.hpp>

#include "walkalg/cactus.hpp"
#include "walkalg/forest.hpp"
#include "walkalg/lincomb.hpp"
#include "walkalg/loop_erasure.hpp"
#include "walkalg/suites.hpp"
#include "walkalg/walk.hpp"

namespace walkalg {

// JSON encodings used by the command line tool. Walks encode as arrays of
// vertex labels, cuts as {"from","to"}, forests as arrays of walks, and
// tensor terms as {"factors":[...]}. Linear combinations encode as arrays
// of {"coeff":"p/q","term":...} objects in basis order, with coefficients
// rendered exactly.

nlohmann::json to_json(const Walk& w);
nlohmann::json to_json(const Cut& c);
nlohmann::json to_json(const Forest& f);
nlohmann::json to_json(const MultisetForest& f);
nlohmann::json to_json(const ErasedCycle& e);
nlohmann::json to_json(const TemporalTree& t);
nlohmann::json to_json(const CheckReport& r);

nlohmann::json to_json(const LinComb<Forest>& v);
nlohmann::json to_json(const LinComb<MultisetForest>& v);
nlohmann::json to_json(const LinComb<TensorPair>& v);
nlohmann::json to_json(const LinComb<SymTensorPair>& v);
nlohmann::json to_json(const LinComb<WalkPair>& v);
nlohmann::json to_json(const LinComb<WalkCutPair>& v);

// Read a digraph from {"vertices":[...], "arcs":[[u,v],...]}. Throws
// std::invalid_argument on malformed input or arcs that name unlisted
// vertices.
Digraph digraph_from_json(const nlohmann::json& j);

}  // namespace walkalg

#endif  // WALKALG_JSON_IO_HPP
