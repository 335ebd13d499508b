#include "walkalg/lincomb.hpp"

namespace walkalg {

Rational counit(const Forest& f) { return f.is_unit() ? 1 : 0; }

Rational counit(const LinComb<Forest>& x) {
  Rational out = 0;
  for (const auto& [f, c] : x)
    if (f.is_unit()) out += c;
  return out;
}

LinComb<TensorPair> twist(const LinComb<TensorPair>& x) {
  LinComb<TensorPair> out;
  for (const auto& [t, c] : x) out.add({t.second, t.first}, c);
  out.canonicalize();
  return out;
}

LinComb<TensorTriple> twist_last_two(const LinComb<TensorTriple>& x) {
  LinComb<TensorTriple> out;
  for (const auto& [t, c] : x) out.add({t[0], t[2], t[1]}, c);
  out.canonicalize();
  return out;
}

LinComb<WalkTriple> twist_last_two(const LinComb<WalkTriple>& x) {
  LinComb<WalkTriple> out;
  for (const auto& [t, c] : x) out.add({t[0], t[2], t[1]}, c);
  out.canonicalize();
  return out;
}

LinComb<Forest> mul(const LinComb<Forest>& a, const LinComb<Forest>& b) {
  return LinComb<Forest>::product(
      a, b, [](const Forest& x, const Forest& y) { return x * y; });
}

LinComb<TensorPair> mul(const LinComb<TensorPair>& a,
                        const LinComb<TensorPair>& b) {
  return LinComb<TensorPair>::product(
      a, b, [](const TensorPair& x, const TensorPair& y) {
        return TensorPair{x.first * y.first, x.second * y.second};
      });
}

LinComb<MultisetForest> multiset_image(const LinComb<Forest>& x) {
  LinComb<MultisetForest> out;
  for (const auto& [f, c] : x) out.add(to_multiset(f), c);
  out.canonicalize();
  return out;
}

LinComb<SymTensorPair> multiset_image(const LinComb<TensorPair>& x) {
  LinComb<SymTensorPair> out;
  for (const auto& [t, c] : x)
    out.add({to_multiset(t.first), to_multiset(t.second)}, c);
  out.canonicalize();
  return out;
}

}  // namespace walkalg
