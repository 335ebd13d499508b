#ifndef WALKALG_COALGEBRA_HPP
#define WALKALG_COALGEBRA_HPP

#include <cstddef>

#include "walkalg/cuts.hpp"
#include "walkalg/forest.hpp"
#include "walkalg/lincomb.hpp"
#include "walkalg/walk.hpp"

namespace walkalg {

// Single-cut coproduct: sum over admissible cuts c of remainder(w,c) (x)
// subwalk(w,c). Zero exactly when the walk has no admissible cut.
LinComb<WalkPair> delta_cp(const Walk& w);

// Counital coproduct on a single walk: unit (x) w + w (x) unit + the sum
// over extended cuts of remainder (x) cut-forest, with the cut-forest
// members in position order.
LinComb<TensorPair> delta_h(const Walk& w);

// Multiplicative extension to forests: componentwise concatenation of the
// member coproducts. delta_h(unit) = unit (x) unit.
LinComb<TensorPair> delta_h(const Forest& f);

// Linear extension.
LinComb<TensorPair> delta_h(const LinComb<Forest>& x);

// Unordered-forest coproduct. Equals the multiset image of delta_h on any
// ordering of the members.
LinComb<SymTensorPair> delta_h_sym(const MultisetForest& f);
LinComb<SymTensorPair> delta_h_sym(const LinComb<MultisetForest>& x);

// Brace coproducts: sum over extended cuts of exactly n sections, the
// remainder paired with the n-member cut forest. delta_n(w,1) matches
// delta_cp(w) term for term; zero whenever n exceeds the number of
// pairwise disjoint admissible cuts. Requires n >= 1.
LinComb<WalkCutPair> delta_n(const Walk& w, std::size_t n);

// Codendriform left part of delta_h on a nonempty forest: the terms in
// which the first member is removed whole, so the second tensor factor
// starts with it. Equals (unit (x) w_1) * delta_h(w_2 ... w_m). Throws
// std::invalid_argument on the empty forest.
LinComb<TensorPair> delta_succ(const Forest& f);

// Codendriform right part: the terms in which the first member keeps a
// nonempty remainder. Equals (delta_h(w_1) - unit (x) w_1) *
// delta_h(w_2 ... w_m); delta_prec + delta_succ = delta_h. Throws
// std::invalid_argument on the empty forest.
LinComb<TensorPair> delta_prec(const Forest& f);

// Antipode by the recursive convolution formula
//   S(w) = -w - sum over extended cuts of remainder * S(cut-forest),
// extended to forests as the reversed product of member antipodes and
// linearly to combinations. S(unit) = unit.
LinComb<Forest> antipode_recursive(const Walk& w);
LinComb<Forest> antipode_recursive(const Forest& f);
LinComb<Forest> antipode_recursive(const LinComb<Forest>& x);

// Antipode in closed form: -w - sum over chains e = (c_1 <= ... <= c_n) of
// (-1)^n times the forest of iterated-removal factors of e.
LinComb<Forest> antipode_closed(const Walk& w);
LinComb<Forest> antipode_closed(const Forest& f);

// Antipode on the unordered side: multiset image of the closed form.
LinComb<MultisetForest> antipode_sym(const Walk& w);
LinComb<MultisetForest> antipode_sym(const MultisetForest& f);

// The iterated-removal factor list of a chain: the first member is the
// walk left after removing every chain cut, and each later member is one
// extracted section, last-removed first, each read over the indices that
// survived the removals made before its own. The chain must be sorted
// ascending by the erasure-time order.
Forest chain_factors(const Walk& w, const Chain& e);

// Identity checks used by both the test suites and the CLI. Each returns
// true when the identity holds exactly for the given input.

// Co-preLie identity: L = (delta_cp (x) id - id (x) delta_cp) o delta_cp
// satisfies L = (id (x) swap) o L.
bool copre_lie_check(const Walk& w);

// Coassociativity of delta_h: exact equality of the two triple coproducts.
bool coassoc_check(const Forest& f);
bool coassoc_check(const LinComb<Forest>& x);

// Left and right counit laws: (counit (x) id) o delta_h = id =
// (id (x) counit) o delta_h.
bool counit_check(const LinComb<Forest>& x);

// Convolution identities for the recursive antipode:
// mul o (S (x) id) o delta_h = unit o counit = mul o (id (x) S) o delta_h.
bool convolution_check(const Forest& f);
bool convolution_check(const LinComb<Forest>& x);

// The four codendriform identities (sum split and the three
// coassociativity-like compatibilities) plus multiplicativity of
// delta_prec / delta_succ over every split of f. Requires f nonempty.
bool codendriform_check(const Forest& f);

// Brace recovery: (d1 (x) id) o d1 - (id (x) d1) o d1 equals
// (id + swap of the last two factors) o d2, where d1 = delta_n(., 1) and
// d2 = delta_n(., 2) with the two-cut forest split into its two walks.
bool brace_prelie_recovery_check(const Walk& w);

}  // namespace walkalg

#endif  // WALKALG_COALGEBRA_HPP
