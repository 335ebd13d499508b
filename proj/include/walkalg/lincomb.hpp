#ifndef WALKALG_LINCOMB_HPP
#define WALKALG_LINCOMB_HPP

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "walkalg/forest.hpp"
#include "walkalg/rational.hpp"

namespace walkalg {

// A finite linear combination of basis elements, by default with exact
// rational coefficients. Terms accumulate in a buffer and collapse on
// first read: sorted by basis, merged, zero coefficients dropped. Reads
// therefore always see a canonical form and equality is term-list
// equality. Internal counting paths instantiate integer coefficients.
template <typename Basis, typename Coeff = Rational>
class LinComb {
 public:
  LinComb() = default;

  static LinComb single(Basis b, Coeff coeff = 1) {
    LinComb out;
    out.add(std::move(b), std::move(coeff));
    return out;
  }

  void add(Basis b, Coeff coeff) {
    if (coeff == 0) return;
    terms_.emplace_back(std::move(b), std::move(coeff));
    normalized_ = terms_.size() <= 1 ||
                  (normalized_ &&
                   terms_[terms_.size() - 2].first < terms_.back().first);
    // Collapse periodically so the buffer never holds more than about
    // twice the distinct terms; doubling keeps the total cost amortized.
    if (!normalized_ && terms_.size() >= 64 &&
        terms_.size() >= 2 * collapsed_size_)
      normalize();
  }

  // Collapses the buffer now. Called on every value a library entry point
  // returns, so shared values never mutate under concurrent const reads.
  void canonicalize() const { normalize(); }

  bool is_zero() const { return normalize().empty(); }
  std::size_t term_count() const { return normalize().size(); }

  Coeff coefficient(const Basis& b) const {
    const auto& t = normalize();
    auto it = std::lower_bound(
        t.begin(), t.end(), b,
        [](const auto& term, const Basis& key) { return term.first < key; });
    return it == t.end() || it->first != b ? Coeff(0) : it->second;
  }

  LinComb& operator+=(const LinComb& other) {
    // Self-addition would iterate a buffer being appended to; copy first.
    if (this == &other) return *this += LinComb(other);
    for (const auto& [b, c] : other.terms_) add(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    if (this == &other) return *this -= LinComb(other);
    for (const auto& [b, c] : other.terms_) add(b, -c);
    return *this;
  }
  LinComb& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
      normalized_ = true;
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Coeff& s, LinComb a) { return a *= s; }
  friend LinComb operator-(LinComb a) { return a *= Coeff(-1); }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.normalize() == b.normalize();
  }

  auto begin() const { return normalize().begin(); }
  auto end() const { return normalize().end(); }

  // Generic bilinear extension of a product on basis elements.
  template <typename Mul>
  static LinComb product(const LinComb& a, const LinComb& b, Mul&& mul) {
    LinComb out;
    for (const auto& [ba, ca] : a.normalize())
      for (const auto& [bb, cb] : b.normalize()) out.add(mul(ba, bb), ca * cb);
    return out;
  }

 private:
  const std::vector<std::pair<Basis, Coeff>>& normalize() const {
    if (normalized_) return terms_;
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      std::size_t j = i + 1;
      while (j < terms_.size() && terms_[j].first == terms_[i].first) {
        terms_[i].second += terms_[j].second;
        ++j;
      }
      if (terms_[i].second != 0) {
        if (out != i) terms_[out] = std::move(terms_[i]);
        ++out;
      }
      i = j;
    }
    terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(out),
                 terms_.end());
    normalized_ = true;
    collapsed_size_ = std::max<std::size_t>(terms_.size(), 32);
    return terms_;
  }

  mutable std::vector<std::pair<Basis, Coeff>> terms_;
  mutable bool normalized_ = true;
  mutable std::size_t collapsed_size_ = 32;
};

// Tensor factors are represented positionally; each slot holds a word.
using TensorPair = std::pair<Forest, Forest>;
using TensorTriple = std::array<Forest, 3>;
using SymTensorPair = std::pair<MultisetForest, MultisetForest>;

// Walk-level tensors for the structures that never leave single walks.
using WalkPair = std::pair<Walk, Walk>;
using WalkTriple = std::array<Walk, 3>;
// Remainder walk paired with a cut forest (brace coproducts).
using WalkCutPair = std::pair<Walk, Forest>;

// Counit: 1 on the empty word, 0 on anything else (trivial walks included).
Rational counit(const Forest& f);
Rational counit(const LinComb<Forest>& x);

// Swap of the two tensor factors.
LinComb<TensorPair> twist(const LinComb<TensorPair>& x);
// Swap of the last two factors of a triple.
LinComb<TensorTriple> twist_last_two(const LinComb<TensorTriple>& x);
LinComb<WalkTriple> twist_last_two(const LinComb<WalkTriple>& x);

// Componentwise concatenation products.
LinComb<Forest> mul(const LinComb<Forest>& a, const LinComb<Forest>& b);
LinComb<TensorPair> mul(const LinComb<TensorPair>& a,
                        const LinComb<TensorPair>& b);

// Forgets member order in every tensor factor.
LinComb<MultisetForest> multiset_image(const LinComb<Forest>& x);
LinComb<SymTensorPair> multiset_image(const LinComb<TensorPair>& x);

}  // namespace walkalg

#endif  // WALKALG_LINCOMB_HPP
