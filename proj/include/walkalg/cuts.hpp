#ifndef WALKALG_CUTS_HPP
#define WALKALG_CUTS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "walkalg/walk.hpp"

namespace walkalg {

// Erasure-time order on sections: a precedes b when a is erased no later
// than b, i.e. a nests inside b or a lies entirely before b. Reflexive, and
// total on the admissible cuts of any fixed walk.
bool time_leq(const Cut& a, const Cut& b);

// Checked form: throws std::invalid_argument unless both cuts are
// admissible cuts of w.
bool time_leq(const Walk& w, const Cut& a, const Cut& b);

// Sections of les(w) that strictly contain c at the right end:
// from <= c.from and c.to < to. Sorted by (from, to). Throws
// std::invalid_argument when c is not a loop-erased section of w.
std::vector<Cut> temporal_context(const Walk& w, const Cut& c);

// Minimum of the temporal context by inclusion, when the context is
// nonempty. The context of any section is totally ordered by inclusion.
// Throws std::invalid_argument when c is not a loop-erased section of w.
std::optional<Cut> temporal_min(const Walk& w, const Cut& c);

// A section is admissible when it is a loop-erased section, is not the
// whole walk, and its root vertex w_from does not reappear in the stretch
// of its minimal enclosing section that follows it (w_{to+1} ... w_{min.to}).
bool is_admissible(const Walk& w, const Cut& c);

// All admissible cuts, sorted ascending by the erasure-time order.
std::vector<Cut> adc(const Walk& w);

// An extended cut: one or more pairwise non-overlapping admissible cuts in
// position order (c[i].to < c[i+1].from).
using ExtCut = std::vector<Cut>;

// All extended cuts, grouped by size then position order.
std::vector<ExtCut> eadc(const Walk& w);

// Extended cuts made of exactly n sections.
std::vector<ExtCut> eadc_n(const Walk& w, std::size_t n);

// A chain: admissible cuts sorted ascending by the erasure-time order.
// Chain members may nest; only distinctness is required.
using Chain = std::vector<Cut>;

// Every nonempty subset of adc(w), each sorted by the erasure-time order;
// the list is grouped by size then by position of the members.
std::vector<Chain> chains(const Walk& w);

}  // namespace walkalg

#endif  // WALKALG_CUTS_HPP
