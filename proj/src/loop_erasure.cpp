#include "walkalg/loop_erasure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace walkalg {

namespace {

// One pass of the chronological erasure over w_1 ... w_limit. The state
// holds the original indices whose vertices currently survive; those
// vertices are always pairwise distinct. `on_cycle(p, state, j)` fires for
// every closing arrival j, with p the state position of the repeated
// vertex, before the state is truncated back to p.
template <typename OnCycle>
std::vector<std::size_t> replay(const Walk& w, std::size_t limit,
                                OnCycle&& on_cycle) {
  std::vector<std::size_t> state{0};
  for (std::size_t j = 1; j <= limit; ++j) {
    auto it = std::find_if(state.begin(), state.end(),
                           [&](std::size_t i) { return w[i] == w[j]; });
    if (it == state.end()) {
      state.push_back(j);
      continue;
    }
    std::size_t p = static_cast<std::size_t>(it - state.begin());
    on_cycle(p, state, j);
    state.resize(p + 1);
  }
  return state;
}

Walk state_walk(const Walk& w, const std::vector<std::size_t>& state) {
  std::vector<VertexId> labels;
  labels.reserve(state.size());
  for (std::size_t i : state) labels.push_back(w[i]);
  return Walk(std::move(labels));
}

// prev[j] = latest index i < j with w_i = w_j, or j itself when the vertex
// is fresh. Erased indices count: sections are cuts of the original walk.
std::vector<std::size_t> previous_occurrence(const Walk& w) {
  std::vector<std::size_t> prev(w.degree() + 1);
  std::map<VertexId, std::size_t> last;
  for (std::size_t j = 0; j <= w.degree(); ++j) {
    auto it = last.try_emplace(w[j], j).first;
    prev[j] = it->second;
    it->second = j;
  }
  return prev;
}

}  // namespace

Walk lew(const Walk& w, std::size_t k) {
  if (k > w.degree())
    throw std::out_of_range("lew: step index past the end of the walk");
  auto state = replay(w, k, [](std::size_t, const auto&, std::size_t) {});
  return state_walk(w, state);
}

Walk skeleton(const Walk& w) { return lew(w, w.degree()); }

std::vector<ErasedCycle> replay_cycles(const Walk& w) {
  std::vector<ErasedCycle> out;
  auto prev = previous_occurrence(w);
  replay(w, w.degree(), [&](std::size_t p, const auto& state, std::size_t j) {
    ErasedCycle cycle;
    cycle.section = Cut{prev[j], j};
    cycle.members.assign(state.begin() + static_cast<std::ptrdiff_t>(p),
                         state.end());
    cycle.members.push_back(j);
    cycle.erased.assign(cycle.members.begin() + 1, cycle.members.end());
    out.push_back(std::move(cycle));
  });
  return out;
}

std::vector<Cut> erased_cycles(const Walk& w) {
  std::vector<Cut> out;
  for (const auto& cycle : replay_cycles(w)) out.push_back(cycle.section);
  return out;
}

std::vector<Cut> les(const Walk& w) {
  // Sections ending at an index j are the newest simple section (k', j)
  // together with (k'', j) for every section (k'', k') already collected:
  // consecutively erased cycles chain end to end.
  std::map<std::size_t, std::vector<std::size_t>> starts_by_end;
  for (const auto& cycle : replay_cycles(w)) {
    auto& starts = starts_by_end[cycle.section.to];
    starts.push_back(cycle.section.from);
    auto earlier = starts_by_end.find(cycle.section.from);
    if (earlier != starts_by_end.end())
      starts.insert(starts.end(), earlier->second.begin(),
                    earlier->second.end());
  }
  std::vector<Cut> out;
  for (const auto& [end, starts] : starts_by_end)
    for (std::size_t s : starts) out.push_back(Cut{s, end});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_les_section(const Walk& w, const Cut& c) {
  auto all = les(w);
  return std::binary_search(all.begin(), all.end(), c);
}

}  // namespace walkalg
