#include "walkalg/cuts.hpp"

#include <algorithm>
#include <stdexcept>

#include "walkalg/loop_erasure.hpp"

namespace walkalg {

bool time_leq(const Cut& a, const Cut& b) {
  bool nested = b.from <= a.from && a.to <= b.to;
  bool before = a.to < b.from;
  return nested || before;
}

bool time_leq(const Walk& w, const Cut& a, const Cut& b) {
  auto admissible = adc(w);
  auto has = [&](const Cut& c) {
    return std::find(admissible.begin(), admissible.end(), c) !=
           admissible.end();
  };
  if (!has(a) || !has(b))
    throw std::invalid_argument("time_leq: cut is not admissible");
  return time_leq(a, b);
}

namespace {

std::vector<Cut> context_in(const std::vector<Cut>& sections, const Cut& c) {
  std::vector<Cut> out;
  for (const Cut& s : sections)
    if (s.from <= c.from && c.to < s.to) out.push_back(s);
  return out;
}

std::optional<Cut> min_of_context(std::vector<Cut> context) {
  if (context.empty()) return std::nullopt;
  // The context may contain incomparable pairs (overlapping sections rooted
  // at the same vertex), but one member is always nested inside every other.
  for (const Cut& m : context) {
    bool below_all = true;
    for (const Cut& s : context)
      if (!(s.from <= m.from && m.to <= s.to)) {
        below_all = false;
        break;
      }
    if (below_all) return m;
  }
  throw std::logic_error("temporal_min: context has no smallest member");
}

bool admissible_in(const Walk& w, const std::vector<Cut>& sections,
                   const Cut& c) {
  if (c.from == 0 && c.to == w.degree()) return false;
  auto min = min_of_context(context_in(sections, c));
  if (!min) return true;
  for (std::size_t i = c.to + 1; i <= min->to; ++i)
    if (w[i] == w[c.from]) return false;
  return true;
}

}  // namespace

std::vector<Cut> temporal_context(const Walk& w, const Cut& c) {
  auto sections = les(w);
  if (!std::binary_search(sections.begin(), sections.end(), c))
    throw std::invalid_argument(
        "temporal_context: not a loop-erased section");
  return context_in(sections, c);
}

std::optional<Cut> temporal_min(const Walk& w, const Cut& c) {
  return min_of_context(temporal_context(w, c));
}

bool is_admissible(const Walk& w, const Cut& c) {
  if (!is_les_section(w, c)) return false;
  return admissible_in(w, les(w), c);
}

std::vector<Cut> adc(const Walk& w) {
  auto sections = les(w);
  std::vector<Cut> out;
  for (const Cut& c : sections)
    if (admissible_in(w, sections, c)) out.push_back(c);
  std::sort(out.begin(), out.end(), [](const Cut& a, const Cut& b) {
    return a != b && time_leq(a, b);
  });
  // The sort comparator is only a strict weak ordering when the time order
  // is total on admissible cuts; verify rather than rely on it silently.
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!time_leq(out[i - 1], out[i]))
      throw std::logic_error("adc: time order is not total");
  return out;
}

namespace {

// Increasing runs of pairwise non-overlapping cuts, drawn left to right
// from `cuts` sorted by position. Exactly the runs of length n are kept.
void extend_runs(const std::vector<Cut>& cuts, std::size_t next,
                 std::size_t remaining, ExtCut& run,
                 std::vector<ExtCut>& out) {
  if (remaining == 0) {
    out.push_back(run);
    return;
  }
  for (std::size_t i = next; i < cuts.size(); ++i) {
    if (!run.empty() && cuts[i].from <= run.back().to) continue;
    run.push_back(cuts[i]);
    extend_runs(cuts, i + 1, remaining - 1, run, out);
    run.pop_back();
  }
}

}  // namespace

std::vector<ExtCut> eadc_n(const Walk& w, std::size_t n) {
  auto cuts = adc(w);
  std::sort(cuts.begin(), cuts.end());
  std::vector<ExtCut> out;
  ExtCut run;
  extend_runs(cuts, 0, n, run, out);
  return out;
}

std::vector<ExtCut> eadc(const Walk& w) {
  auto cuts = adc(w);
  std::sort(cuts.begin(), cuts.end());
  std::vector<ExtCut> out;
  for (std::size_t n = 1;; ++n) {
    ExtCut run;
    std::size_t before = out.size();
    extend_runs(cuts, 0, n, run, out);
    if (out.size() == before) break;
  }
  return out;
}

std::vector<Chain> chains(const Walk& w) {
  auto cuts = adc(w);  // already ascending in the erasure-time order
  std::vector<Chain> out;
  // Subsets grouped by size; picking index combinations in lexicographic
  // order lists every size class by member order.
  for (std::size_t n = 1; n <= cuts.size(); ++n) {
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    while (true) {
      Chain chain;
      for (std::size_t i : pick) chain.push_back(cuts[i]);
      out.push_back(std::move(chain));
      std::size_t i = n;
      while (i > 0 && pick[i - 1] == cuts.size() - n + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t k = i; k < n; ++k) pick[k] = pick[k - 1] + 1;
    }
  }
  return out;
}

}  // namespace walkalg
