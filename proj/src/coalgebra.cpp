#include "walkalg/coalgebra.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace walkalg {

namespace {

// Cut sections of one extended cut, in position order.
Forest cut_pieces(const Walk& w, const ExtCut& e) {
  std::vector<Walk> pieces;
  pieces.reserve(e.size());
  for (const Cut& c : e) pieces.push_back(subwalk(w, c));
  return Forest(std::move(pieces));
}

Forest drop_first(const Forest& f) {
  return Forest({f.members().begin() + 1, f.members().end()});
}

// The non-unit left half of delta_h on one walk: w (x) unit plus every
// extended-cut term. Built directly from the cuts rather than by
// subtracting from delta_h, so the sum split is a real identity.
LinComb<TensorPair> proper_left_terms(const Walk& w) {
  LinComb<TensorPair> out;
  out.add({Forest(w), Forest::unit()}, 1);
  for (const ExtCut& e : eadc(w))
    out.add({Forest(remainder(w, e)), cut_pieces(w, e)}, 1);
  return out;
}

}  // namespace

LinComb<WalkPair> delta_cp(const Walk& w) {
  LinComb<WalkPair> out;
  for (const Cut& c : adc(w)) out.add({remainder(w, c), subwalk(w, c)}, 1);
  out.canonicalize();
  return out;
}

LinComb<TensorPair> delta_h(const Walk& w) {
  LinComb<TensorPair> out;
  out.add({Forest::unit(), Forest(w)}, 1);
  out += proper_left_terms(w);
  out.canonicalize();
  return out;
}

LinComb<TensorPair> delta_h(const Forest& f) {
  LinComb<TensorPair> out =
      LinComb<TensorPair>::single({Forest::unit(), Forest::unit()});
  for (const Walk& member : f.members()) out = mul(out, delta_h(member));
  out.canonicalize();
  return out;
}

LinComb<TensorPair> delta_h(const LinComb<Forest>& x) {
  LinComb<TensorPair> out;
  for (const auto& [f, c] : x) {
    auto part = delta_h(f);
    part *= c;
    out += part;
  }
  out.canonicalize();
  return out;
}

LinComb<SymTensorPair> delta_h_sym(const MultisetForest& f) {
  return multiset_image(delta_h(Forest(f.members())));
}

LinComb<SymTensorPair> delta_h_sym(const LinComb<MultisetForest>& x) {
  LinComb<SymTensorPair> out;
  for (const auto& [f, c] : x) {
    auto part = delta_h_sym(f);
    part *= c;
    out += part;
  }
  out.canonicalize();
  return out;
}

LinComb<WalkCutPair> delta_n(const Walk& w, std::size_t n) {
  if (n == 0) throw std::invalid_argument("delta_n: n must be positive");
  LinComb<WalkCutPair> out;
  for (const ExtCut& e : eadc_n(w, n))
    out.add({remainder(w, e), cut_pieces(w, e)}, 1);
  out.canonicalize();
  return out;
}

LinComb<TensorPair> delta_succ(const Forest& f) {
  if (f.is_unit())
    throw std::invalid_argument("delta_succ: needs a nonempty word");
  auto head = LinComb<TensorPair>::single({Forest::unit(), Forest(f[0])});
  return mul(head, delta_h(drop_first(f)));
}

LinComb<TensorPair> delta_prec(const Forest& f) {
  if (f.is_unit())
    throw std::invalid_argument("delta_prec: needs a nonempty word");
  return mul(proper_left_terms(f[0]), delta_h(drop_first(f)));
}

namespace {

using Memo = std::map<Walk, LinComb<Forest>>;

LinComb<Forest> antipode_walk(const Walk& w, Memo& memo);

// Antipode of a word: reversed product of the member antipodes.
LinComb<Forest> antipode_word(const Forest& f, Memo& memo) {
  auto out = LinComb<Forest>::single(Forest::unit());
  for (auto it = f.members().rbegin(); it != f.members().rend(); ++it)
    out = mul(out, antipode_walk(*it, memo));
  return out;
}

LinComb<Forest> antipode_walk(const Walk& w, Memo& memo) {
  auto hit = memo.find(w);
  if (hit != memo.end()) return hit->second;
  LinComb<Forest> out;
  out.add(Forest(w), -1);
  for (const ExtCut& e : eadc(w)) {
    auto rest = antipode_word(cut_pieces(w, e), memo);
    rest *= -1;
    out += mul(LinComb<Forest>::single(Forest(remainder(w, e))), rest);
  }
  out.canonicalize();
  memo.emplace(w, out);
  return out;
}

}  // namespace

LinComb<Forest> antipode_recursive(const Walk& w) {
  Memo memo;
  return antipode_walk(w, memo);
}

LinComb<Forest> antipode_recursive(const Forest& f) {
  Memo memo;
  return antipode_word(f, memo);
}

LinComb<Forest> antipode_recursive(const LinComb<Forest>& x) {
  Memo memo;
  LinComb<Forest> out;
  for (const auto& [f, c] : x) {
    auto part = antipode_word(f, memo);
    part *= c;
    out += part;
  }
  out.canonicalize();
  return out;
}

Forest chain_factors(const Walk& w, const Chain& e) {
  for (const Cut& c : e)
    if (c.from >= c.to || c.to > w.degree() || w[c.from] != w[c.to])
      throw std::invalid_argument("chain_factors: not a closed section");
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i] == e[i + 1] || !time_leq(e[i], e[i + 1]))
      throw std::invalid_argument(
          "chain_factors: chain not ascending in the erasure-time order");

  std::vector<bool> alive(w.num_vertices(), true);
  std::vector<Walk> factors;  // extraction order; emitted last-first
  for (const Cut& c : e) {
    if (!alive[c.from])
      throw std::logic_error("chain_factors: section root already removed");
    std::vector<VertexId> labels;
    for (std::size_t i = c.from; i <= c.to; ++i)
      if (alive[i]) labels.push_back(w[i]);
    for (std::size_t i = c.from + 1; i <= c.to; ++i) alive[i] = false;
    Walk factor(std::move(labels));
    if (!factor.is_closed())
      throw std::logic_error("chain_factors: extracted factor is not closed");
    factors.push_back(std::move(factor));
  }

  std::vector<VertexId> kept;
  for (std::size_t i = 0; i < w.num_vertices(); ++i)
    if (alive[i]) kept.push_back(w[i]);
  std::vector<Walk> members{Walk(std::move(kept))};
  members.insert(members.end(), factors.rbegin(), factors.rend());
  return Forest(std::move(members));
}

LinComb<Forest> antipode_closed(const Walk& w) {
  LinComb<Forest> out;
  out.add(Forest(w), -1);
  for (const Chain& e : chains(w))
    out.add(chain_factors(w, e), e.size() % 2 == 1 ? 1 : -1);
  out.canonicalize();
  return out;
}

LinComb<Forest> antipode_closed(const Forest& f) {
  auto out = LinComb<Forest>::single(Forest::unit());
  for (auto it = f.members().rbegin(); it != f.members().rend(); ++it)
    out = mul(out, antipode_closed(*it));
  return out;
}

LinComb<MultisetForest> antipode_sym(const Walk& w) {
  return multiset_image(antipode_closed(w));
}

LinComb<MultisetForest> antipode_sym(const MultisetForest& f) {
  return multiset_image(antipode_closed(Forest(f.members())));
}

namespace {

// (coprod (x) id) on a pair combination, with `coprod` applied to the
// first slot, accumulated into `acc` with the given sign. Streaming into
// one accumulator keeps at most one expansion alive at a time.
template <typename Pair, typename Triple, typename Coprod>
void accumulate_first(LinComb<Triple>& acc, const LinComb<Pair>& x,
                      Coprod&& coprod, int sign) {
  for (const auto& [t, c] : x)
    for (const auto& [s, d] : coprod(t.first))
      acc.add(Triple{s.first, s.second, t.second}, sign * c * d);
}

// (id (x) coprod) on a pair combination, accumulated with the given sign.
template <typename Pair, typename Triple, typename Coprod>
void accumulate_second(LinComb<Triple>& acc, const LinComb<Pair>& x,
                       Coprod&& coprod, int sign) {
  for (const auto& [t, c] : x)
    for (const auto& [s, d] : coprod(t.second))
      acc.add(Triple{t.first, s.first, s.second}, sign * c * d);
}

template <typename Pair, typename Triple, typename Coprod>
auto expand_first(const LinComb<Pair>& x, Coprod&& coprod) {
  LinComb<Triple> out;
  accumulate_first<Pair, Triple>(out, x, coprod, 1);
  return out;
}

template <typename Pair, typename Triple, typename Coprod>
auto expand_second(const LinComb<Pair>& x, Coprod&& coprod) {
  LinComb<Triple> out;
  accumulate_second<Pair, Triple>(out, x, coprod, 1);
  return out;
}

LinComb<WalkTriple> expand_first_cp(const LinComb<WalkPair>& x) {
  return expand_first<WalkPair, WalkTriple>(
      x, [](const Walk& w) { return delta_cp(w); });
}

LinComb<WalkTriple> expand_second_cp(const LinComb<WalkPair>& x) {
  return expand_second<WalkPair, WalkTriple>(
      x, [](const Walk& w) { return delta_cp(w); });
}

}  // namespace

bool copre_lie_check(const Walk& w) {
  auto d = delta_cp(w);
  auto defect = expand_first_cp(d) - expand_second_cp(d);
  return defect == twist_last_two(defect);
}

namespace {

// The triple expansions can reach millions of terms whose factors repeat
// heavily, so the identity checks below run on interned factor ids: each
// distinct word is stored once and terms shrink to three integers with a
// plain machine-integer multiplicity (coproduct coefficients stay small).
struct ForestKeyHash {
  std::size_t operator()(const Forest& f) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t v : f.key()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

class WordPool {
 public:
  std::uint32_t id(const Forest& f) {
    auto [it, fresh] =
        ids_.try_emplace(f, static_cast<std::uint32_t>(words_.size()));
    if (fresh) words_.push_back(f);
    return it->second;
  }
  Forest at(std::uint32_t i) const { return words_[i]; }

 private:
  std::unordered_map<Forest, std::uint32_t, ForestKeyHash> ids_;
  std::vector<Forest> words_;
};

using IdPair = std::array<std::uint32_t, 2>;
using IdTriple = std::array<std::uint32_t, 3>;
using IdPairs = std::vector<std::pair<IdPair, std::int64_t>>;

std::int64_t small_count(const Rational& c) {
  if (denominator(c) != 1)
    throw std::logic_error("coproduct coefficient is not an integer");
  return numerator(c).convert_to<std::int64_t>();
}

// A coproduct evaluated and interned at most once per pool word.
template <typename Coprod>
class InternedCoprod {
 public:
  InternedCoprod(WordPool& pool, Coprod coprod)
      : pool_(pool), coprod_(std::move(coprod)) {}

  const IdPairs& operator()(std::uint32_t fid) {
    if (fid >= cache_.size()) cache_.resize(fid + 1);
    if (cache_[fid].empty()) {
      Forest f = pool_.at(fid);  // copy: interning below may reallocate
      IdPairs out;
      for (const auto& [t, c] : coprod_(f))
        out.push_back({{pool_.id(t.first), pool_.id(t.second)},
                       small_count(c)});
      cache_[fid] = std::move(out);
    }
    return cache_[fid];
  }

 private:
  WordPool& pool_;
  Coprod coprod_;
  std::vector<IdPairs> cache_;  // a computed coproduct is never empty
};

IdPairs intern_pairs(WordPool& pool, const LinComb<TensorPair>& x) {
  IdPairs out;
  for (const auto& [t, c] : x)
    out.push_back({{pool.id(t.first), pool.id(t.second)}, small_count(c)});
  return out;
}

using IdDiff = LinComb<IdTriple, std::int64_t>;

template <typename Coprod>
void accumulate_first(IdDiff& acc, const IdPairs& pairs,
                      InternedCoprod<Coprod>& coprod, int sign) {
  for (const auto& [t, c] : pairs)
    for (const auto& [s, d] : coprod(t[0]))
      acc.add({s[0], s[1], t[1]}, sign * c * d);
}

template <typename Coprod>
void accumulate_second(IdDiff& acc, const IdPairs& pairs,
                       InternedCoprod<Coprod>& coprod, int sign) {
  for (const auto& [t, c] : pairs)
    for (const auto& [s, d] : coprod(t[1]))
      acc.add({t[0], s[0], s[1]}, sign * c * d);
}

bool coassoc_holds(const LinComb<TensorPair>& pairs) {
  WordPool pool;
  InternedCoprod dh(pool, [](const Forest& f) { return delta_h(f); });
  IdPairs source = intern_pairs(pool, pairs);
  IdDiff diff;
  accumulate_first(diff, source, dh, 1);
  accumulate_second(diff, source, dh, -1);
  return diff.is_zero();
}

}  // namespace

bool coassoc_check(const Forest& f) {
  return coassoc_holds(delta_h(f));
}

bool coassoc_check(const LinComb<Forest>& x) {
  // The associativity defect is linear in the input, so clearing the
  // coefficient denominators up front preserves whether it vanishes and
  // keeps the accumulation below in machine integers.
  boost::multiprecision::cpp_int scale = 1;
  for (const auto& [f, c] : x) scale = lcm(scale, denominator(c));
  LinComb<Forest> cleared;
  for (const auto& [f, c] : x) cleared.add(f, c * Rational(scale));
  return coassoc_holds(delta_h(cleared));
}

bool counit_check(const LinComb<Forest>& x) {
  LinComb<Forest> left, right;
  for (const auto& [t, c] : delta_h(x)) {
    left.add(t.second, c * counit(t.first));
    right.add(t.first, c * counit(t.second));
  }
  return left == x && right == x;
}

namespace {

bool convolution_holds(const LinComb<Forest>& x) {
  LinComb<Forest> target;
  target.add(Forest::unit(), counit(x));
  LinComb<Forest> left, right;
  for (const auto& [t, c] : delta_h(x)) {
    auto s_first = antipode_recursive(t.first);
    s_first *= c;
    left += mul(s_first, LinComb<Forest>::single(t.second));
    auto s_second = antipode_recursive(t.second);
    s_second *= c;
    right += mul(LinComb<Forest>::single(t.first), s_second);
  }
  return left == target && right == target;
}

}  // namespace

bool convolution_check(const Forest& f) {
  return convolution_holds(LinComb<Forest>::single(f));
}

bool convolution_check(const LinComb<Forest>& x) {
  return convolution_holds(x);
}

bool codendriform_check(const Forest& f) {
  auto prec = delta_prec(f);
  auto succ = delta_succ(f);
  if (prec + succ != delta_h(f)) return false;

  WordPool pool;
  InternedCoprod dh(pool, [](const Forest& g) { return delta_h(g); });
  InternedCoprod dp(pool, [](const Forest& g) { return delta_prec(g); });
  InternedCoprod ds(pool, [](const Forest& g) { return delta_succ(g); });
  IdPairs prec_ids = intern_pairs(pool, prec);
  IdPairs succ_ids = intern_pairs(pool, succ);
  {
    IdDiff diff;
    accumulate_first(diff, succ_ids, dh, 1);
    accumulate_second(diff, succ_ids, ds, -1);
    if (!diff.is_zero()) return false;
  }
  {
    IdDiff diff;
    accumulate_first(diff, prec_ids, ds, 1);
    accumulate_second(diff, succ_ids, dp, -1);
    if (!diff.is_zero()) return false;
  }
  {
    IdDiff diff;
    accumulate_first(diff, prec_ids, dp, 1);
    accumulate_second(diff, prec_ids, dh, -1);
    if (!diff.is_zero()) return false;
  }

  for (std::size_t k = 1; k < f.size(); ++k) {
    Forest head({f.members().begin(), f.members().begin() + k});
    Forest tail({f.members().begin() + k, f.members().end()});
    auto dh_tail = delta_h(tail);
    if (prec != mul(delta_prec(head), dh_tail)) return false;
    if (succ != mul(delta_succ(head), dh_tail)) return false;
  }
  return true;
}

bool brace_prelie_recovery_check(const Walk& w) {
  auto d = delta_cp(w);
  auto lhs = expand_first_cp(d) - expand_second_cp(d);
  LinComb<WalkTriple> rhs;
  for (const auto& [t, c] : delta_n(w, 2)) {
    const Forest& pieces = t.second;
    rhs.add({t.first, pieces[0], pieces[1]}, c);
    rhs.add({t.first, pieces[1], pieces[0]}, c);
  }
  return lhs == rhs;
}

}  // namespace walkalg
