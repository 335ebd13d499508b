#ifndef WALKALG_LOOP_ERASURE_HPP
#define WALKALG_LOOP_ERASURE_HPP

#include <cstddef>
#include <vector>

#include "walkalg/walk.hpp"

namespace walkalg {

// State of the chronological loop erasure after consuming w_0 ... w_k:
// cycles are removed the moment they close. Requires k <= degree.
Walk lew(const Walk& w, std::size_t k);

// Loop-erased skeleton: the erasure state after the full walk. Always
// self-avoiding; the trivial walk on w_0 iff w is closed.
Walk skeleton(const Walk& w);

// All loop-erased sections of w: closed sections erased by the procedure,
// including compositions of consecutively erased cycles chained end to end.
// Sorted by (from, to).
std::vector<Cut> les(const Walk& w);

// Membership of one section in les(w).
bool is_les_section(const Walk& w, const Cut& c);

// The minimal simple cycles removed by the erasure, as sections of w in
// erasure order. Their interiors partition the indices outside the skeleton.
std::vector<Cut> erased_cycles(const Walk& w);

// One erased simple cycle with its replay context: `section` is the
// erasure-time cut (last prior index carrying the closing vertex, close
// index); `members` lists the original indices whose vertices form the
// simple cycle (first member is the surviving state index); `erased` lists
// the indices removed from the erasure state at that moment.
struct ErasedCycle {
  Cut section;
  std::vector<std::size_t> members;
  std::vector<std::size_t> erased;

  std::size_t root_index() const { return members.front(); }
  std::size_t close_index() const { return members.back(); }
};

// Full replay of the erasure, one record per removed simple cycle, in
// erasure order. The vertex sequence along `members` is self-avoiding up to
// the repeated endpoint even when the section does not read contiguously.
std::vector<ErasedCycle> replay_cycles(const Walk& w);

}  // namespace walkalg

#endif  // WALKALG_LOOP_ERASURE_HPP
