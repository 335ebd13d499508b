#include "walkalg/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "walkalg/cactus.hpp"
#include "walkalg/coalgebra.hpp"
#include "walkalg/cuts.hpp"
#include "walkalg/lincomb.hpp"
#include "walkalg/loop_erasure.hpp"

namespace walkalg {

namespace {

// Plain-text term renderers for failure records.
std::string term_str(const Walk& w) { return to_string(w); }
std::string term_str(const Forest& f) { return to_string(f); }
std::string term_str(const MultisetForest& f) { return to_string(f); }

template <typename A, typename B>
std::string term_str(const std::pair<A, B>& t) {
  return term_str(t.first) + " (x) " + term_str(t.second);
}

template <typename T, std::size_t N>
std::string term_str(const std::array<T, N>& t) {
  std::string out;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += " (x) ";
    out += term_str(t[i]);
  }
  return out;
}

template <typename Basis>
std::string render(const LinComb<Basis>& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [b, c] : x) {
    if (!first) out << " + ";
    first = false;
    out << to_string(c) << "*" << term_str(b);
  }
  return out.str();
}

std::string cut_str(const Cut& c) {
  return "(" + std::to_string(c.from) + "," + std::to_string(c.to) + ")";
}

void fail(CheckReport& report, std::size_t index, std::string input,
          std::string identity, std::string lhs, std::string rhs) {
  report.failures.push_back({index, std::move(input), std::move(identity),
                             std::move(lhs), std::move(rhs)});
}

// Associator defect of the single-cut coproduct.
LinComb<WalkTriple> cp_defect(const Walk& w) {
  auto d = delta_cp(w);
  LinComb<WalkTriple> out;
  for (const auto& [t, c] : d) {
    for (const auto& [s, e] : delta_cp(t.first))
      out.add({s.first, s.second, t.second}, c * e);
    for (const auto& [s, e] : delta_cp(t.second))
      out.add({t.first, s.first, s.second}, -c * e);
  }
  return out;
}

void suite_copre_lie(const std::vector<Walk>& walks, CheckReport& report) {
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const Walk& w = walks[i];
    ++report.checked;
    if (!copre_lie_check(w)) {
      auto defect = cp_defect(w);
      fail(report, i, to_string(w),
           "associator defect is right-twist symmetric", render(defect),
           render(twist_last_two(defect)));
    }
    bool primitive = delta_cp(w).is_zero();
    bool self_avoiding = classify(w) != WalkClass::Other;
    if (primitive != self_avoiding)
      fail(report, i, to_string(w),
           "delta_cp vanishes exactly on self-avoiding walks and polygons",
           render(delta_cp(w)), to_string(classify(w)));
  }
}

// Words of one, two, and three walks drawn cyclically from the sample.
std::vector<Forest> sample_words(const std::vector<Walk>& walks) {
  std::vector<Forest> out;
  out.reserve(walks.size());
  for (std::size_t i = 0; i < walks.size(); ++i) {
    std::vector<Walk> members;
    for (std::size_t k = 0; k <= i % 3; ++k)
      members.push_back(walks[(i + k) % walks.size()]);
    out.push_back(Forest(std::move(members)));
  }
  return out;
}

template <typename Coprod>
LinComb<TensorTriple> triple_first(const LinComb<TensorPair>& x,
                                   Coprod&& coprod) {
  LinComb<TensorTriple> out;
  for (const auto& [t, c] : x)
    for (const auto& [s, d] : coprod(t.first))
      out.add({s.first, s.second, t.second}, c * d);
  return out;
}

template <typename Coprod>
LinComb<TensorTriple> triple_second(const LinComb<TensorPair>& x,
                                    Coprod&& coprod) {
  LinComb<TensorTriple> out;
  for (const auto& [t, c] : x)
    for (const auto& [s, d] : coprod(t.second))
      out.add({t.first, s.first, s.second}, c * d);
  return out;
}

void suite_coassoc(const std::vector<Walk>& walks, CheckReport& report) {
  auto dh = [](const Forest& g) { return delta_h(g); };
  for (std::size_t i = 0; const Forest& f : sample_words(walks)) {
    ++report.checked;
    if (!coassoc_check(f)) {
      auto pairs = delta_h(f);
      fail(report, i, to_string(f), "triple coproducts agree",
           render(triple_first(pairs, dh)), render(triple_second(pairs, dh)));
    }
    auto single = LinComb<Forest>::single(f);
    if (!counit_check(single)) {
      LinComb<Forest> left, right;
      for (const auto& [t, c] : delta_h(f)) {
        left.add(t.second, c * counit(t.first));
        right.add(t.first, c * counit(t.second));
      }
      fail(report, i, to_string(f), "counit laws reproduce the input",
           render(left), render(right));
    }
    for (const auto& [t, c] : delta_h(f))
      if (t.first.degree() + t.second.degree() != f.degree()) {
        fail(report, i, to_string(f), "coproduct terms are degree homogeneous",
             term_str(t), std::to_string(f.degree()));
        break;
      }
    ++i;
  }
}

void suite_antipode(const std::vector<Walk>& walks, CheckReport& report) {
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const Walk& w = walks[i];
    ++report.checked;
    auto closed = antipode_closed(w);
    auto recursive = antipode_recursive(w);
    if (closed != recursive)
      fail(report, i, to_string(w),
           "closed-form antipode equals the recursive antipode",
           render(closed), render(recursive));
    if (!convolution_check(Forest(w))) {
      LinComb<Forest> left;
      for (const auto& [t, c] : delta_h(Forest(w))) {
        auto part = antipode_recursive(t.first);
        part *= c;
        left += mul(part, LinComb<Forest>::single(t.second));
      }
      LinComb<Forest> target;
      target.add(Forest::unit(), counit(Forest(w)));
      fail(report, i, to_string(w),
           "antipode convolution collapses to the counit", render(left),
           render(target));
    }
    if (antipode_sym(w) != multiset_image(recursive))
      fail(report, i, to_string(w),
           "unordered antipode is the multiset image of the tensor antipode",
           render(antipode_sym(w)), render(multiset_image(recursive)));
  }
}

void record_codendriform_failure(const Forest& f, std::size_t index,
                                 CheckReport& report) {
  auto dh = [](const Forest& g) { return delta_h(g); };
  auto dp = [](const Forest& g) { return delta_prec(g); };
  auto ds = [](const Forest& g) { return delta_succ(g); };
  auto prec = delta_prec(f);
  auto succ = delta_succ(f);
  std::string input = to_string(f);
  if (prec + succ != delta_h(f)) {
    fail(report, index, input, "left and right parts sum to the coproduct",
         render(prec + succ), render(delta_h(f)));
    return;
  }
  if (triple_first(succ, dh) != triple_second(succ, ds)) {
    fail(report, index, input, "right-part coassociativity",
         render(triple_first(succ, dh)), render(triple_second(succ, ds)));
    return;
  }
  if (triple_first(prec, ds) != triple_second(succ, dp)) {
    fail(report, index, input, "mixed-part compatibility",
         render(triple_first(prec, ds)), render(triple_second(succ, dp)));
    return;
  }
  if (triple_first(prec, dp) != triple_second(prec, dh)) {
    fail(report, index, input, "left-part coassociativity",
         render(triple_first(prec, dp)), render(triple_second(prec, dh)));
    return;
  }
  for (std::size_t k = 1; k < f.size(); ++k) {
    Forest head({f.members().begin(), f.members().begin() + k});
    Forest tail({f.members().begin() + k, f.members().end()});
    auto dh_tail = delta_h(tail);
    if (prec != mul(delta_prec(head), dh_tail)) {
      fail(report, index, input, "left part is multiplicative over splits",
           render(prec), render(mul(delta_prec(head), dh_tail)));
      return;
    }
    if (succ != mul(delta_succ(head), dh_tail)) {
      fail(report, index, input, "right part is multiplicative over splits",
           render(succ), render(mul(delta_succ(head), dh_tail)));
      return;
    }
  }
  fail(report, index, input, "codendriform identities", "(not reproduced)",
       "(not reproduced)");
}

void suite_dendriform(const std::vector<Walk>& walks, CheckReport& report) {
  for (std::size_t i = 0; const Forest& f : sample_words(walks)) {
    ++report.checked;
    if (!codendriform_check(f)) record_codendriform_failure(f, i, report);
    ++i;
  }
}

void suite_brace(const std::vector<Walk>& walks, CheckReport& report) {
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const Walk& w = walks[i];
    ++report.checked;
    if (!brace_prelie_recovery_check(w)) {
      auto defect = cp_defect(w);
      LinComb<WalkTriple> symmetrized;
      for (const auto& [t, c] : delta_n(w, 2)) {
        symmetrized.add({t.first, t.second[0], t.second[1]}, c);
        symmetrized.add({t.first, t.second[1], t.second[0]}, c);
      }
      fail(report, i, to_string(w),
           "first brace defect equals the symmetrized second brace",
           render(defect), render(symmetrized));
    }
    LinComb<WalkPair> first_brace;
    for (const auto& [t, c] : delta_n(w, 1))
      first_brace.add({t.first, t.second[0]}, c);
    if (first_brace != delta_cp(w))
      fail(report, i, to_string(w),
           "first brace coproduct matches the single-cut coproduct",
           render(first_brace), render(delta_cp(w)));
    std::size_t beyond = adc(w).size() + 1;
    if (!delta_n(w, beyond).is_zero())
      fail(report, i, to_string(w),
           "brace coproducts vanish past the admissible-cut count",
           render(delta_n(w, beyond)), "0");
  }
}

void suite_morphism(const std::vector<Walk>& walks, std::uint64_t seed,
                    CheckReport& report) {
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const Walk& w = walks[i];
    ++report.checked;
    LinComb<TensorPair> lhs;
    for (const auto& [t, c] : delta_h(w))
      lhs.add({phi(t.first), phi(t.second)}, c);
    LinComb<TensorPair> rhs;
    bool factors_cacti = true;
    for (const auto& [t, c] : delta_h(phi(w))) {
      for (const Walk& m : t.first.members()) factors_cacti &= is_cactus(m);
      for (const Walk& m : t.second.members()) factors_cacti &= is_cactus(m);
      rhs.add({canonical_relabel(t.first), canonical_relabel(t.second)}, c);
    }
    if (!factors_cacti)
      fail(report, i, to_string(w),
           "coproduct factors of a cactus shape are cactus walks",
           to_string(phi(w)), "non-cactus factor");
    if (lhs != rhs)
      fail(report, i, to_string(w),
           "cactus projection commutes with the coproduct", render(lhs),
           render(rhs));

    LinComb<Forest> anti_lhs;
    for (const auto& [f, c] : antipode_closed(w)) anti_lhs.add(phi(f), c);
    LinComb<Forest> anti_rhs;
    for (const auto& [f, c] : antipode_closed(phi(w)))
      anti_rhs.add(canonical_relabel(f), c);
    if (anti_lhs != anti_rhs)
      fail(report, i, to_string(w),
           "cactus projection commutes with the antipode", render(anti_lhs),
           render(anti_rhs));
  }

  // Representative independence of the unordered coproduct: permuting the
  // word must not change the multiset image.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < walks.size(); ++i) {
    ++report.checked;
    std::vector<Walk> members;
    for (std::size_t k = 0; k <= i % 2 + 1; ++k)
      members.push_back(walks[(i + k) % walks.size()]);
    std::vector<Walk> shuffled = members;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto a = multiset_image(delta_h(Forest(members)));
    auto b = multiset_image(delta_h(Forest(shuffled)));
    if (a != b)
      fail(report, walks.size() + i, to_string(Forest(members)),
           "unordered coproduct is representative independent", render(a),
           render(b));
  }
}

// All closed sections (i,j) of w, admissible or not.
std::vector<Cut> closed_sections(const Walk& w) {
  std::vector<Cut> out;
  for (std::size_t i = 0; i < w.degree(); ++i)
    for (std::size_t j = i + 1; j <= w.degree(); ++j)
      if (w[i] == w[j]) out.push_back({i, j});
  return out;
}

// Original indices surviving the removal of an extended cut, in order.
std::vector<std::size_t> surviving_indices(const Walk& w, const ExtCut& e) {
  std::vector<std::size_t> out;
  std::size_t next_cut = 0;
  for (std::size_t i = 0; i < w.num_vertices(); ++i) {
    while (next_cut < e.size() && e[next_cut].to < i) ++next_cut;
    bool removed = next_cut < e.size() && e[next_cut].from < i &&
                   i <= e[next_cut].to;
    if (!removed) out.push_back(i);
  }
  return out;
}

void suite_cuts(const std::vector<Walk>& walks, CheckReport& report) {
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const Walk& w = walks[i];
    ++report.checked;
    std::string input = to_string(w);

    auto sections = les(w);
    for (std::size_t a = 0; a < sections.size(); ++a)
      for (std::size_t b = 0; b < sections.size(); ++b) {
        const Cut &x = sections[a], &y = sections[b];
        // Sections rooted at distinct vertices never interleave; sections
        // sharing a root vertex may, so they are exempt here.
        if (x.from < y.from && y.from < x.to && x.to < y.to &&
            w[x.from] != w[y.from])
          fail(report, i, input,
               "sections at distinct vertices never straddle", cut_str(x),
               cut_str(y));
      }

    for (const Cut& c : sections) {
      try {
        (void)temporal_min(w, c);
      } catch (const std::logic_error&) {
        fail(report, i, input,
             "every nonempty context has a smallest member", cut_str(c),
             "(no member nested inside all others)");
      }
    }

    auto admissible = adc(w);
    for (std::size_t a = 0; a < admissible.size(); ++a)
      for (std::size_t b = 0; b < admissible.size(); ++b) {
        if (a == b) continue;
        bool ab = time_leq(admissible[a], admissible[b]);
        bool ba = time_leq(admissible[b], admissible[a]);
        if (ab == ba)
          fail(report, i, input,
               "erasure-time order is total on admissible cuts",
               cut_str(admissible[a]), cut_str(admissible[b]));
      }

    auto in_adc = [&](const Cut& c) {
      return std::find(admissible.begin(), admissible.end(), c) !=
             admissible.end();
    };

    auto all_cuts = closed_sections(w);
    for (const Cut& c : all_cuts)
      for (const Cut& d : all_cuts) {
        if (c.to < d.from) {
          // Disjoint exchange: removing either cut first must leave the
          // other admissible in the reduced walk exactly as often.
          std::size_t width = c.to - c.from;
          Cut d_shifted{d.from - width, d.to - width};
          bool one = in_adc(c) && is_admissible(remainder(w, c), d_shifted);
          bool two = in_adc(d) && is_admissible(remainder(w, d), c);
          if (one != two)
            fail(report, i, input, "exchange of disjoint cuts",
                 cut_str(c) + " then " + cut_str(d) + ": " +
                     (one ? "true" : "false"),
                 cut_str(d) + " then " + cut_str(c) + ": " +
                     (two ? "true" : "false"));
        } else if (c.from < d.from && d.to <= c.to) {
          // Nested exchange: an inner cut of the section versus the outer
          // cut shrunk by the inner one on the remainder.
          Cut d_local{d.from - c.from, d.to - c.from};
          Cut c_minus_d{c.from, c.to - (d.to - d.from)};
          bool one = in_adc(c) && is_admissible(subwalk(w, c), d_local);
          bool two =
              in_adc(d) && is_admissible(remainder(w, d), c_minus_d);
          if (one != two)
            fail(report, i, input, "exchange of nested cuts",
                 cut_str(c) + " around " + cut_str(d) + ": " +
                     (one ? "true" : "false"),
                 cut_str(d) + " inside " + cut_str(c) + ": " +
                     (two ? "true" : "false"));
        }
      }

    auto extended = eadc(w);
    for (const ExtCut& e : extended) {
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (!in_adc(e[k]))
          fail(report, i, input, "extended cuts use admissible cuts only",
               cut_str(e[k]), "not admissible");
        if (k + 1 < e.size() && e[k].to >= e[k + 1].from)
          fail(report, i, input, "extended cuts are pairwise non-overlapping",
               cut_str(e[k]), cut_str(e[k + 1]));
      }
      Walk rem = remainder(w, e);
      auto survivors = surviving_indices(w, e);
      // Every member survives as a loop-erased section of the remainder
      // once the other members are cut away, in remainder coordinates.
      for (std::size_t k = 0; k < e.size(); ++k) {
        ExtCut others;
        for (std::size_t m = 0; m < e.size(); ++m)
          if (m != k) others.push_back(e[m]);
        Walk partial = remainder(w, others);
        auto index_of = [&](std::size_t original) {
          auto keep = surviving_indices(w, others);
          return std::lower_bound(keep.begin(), keep.end(), original) -
                 keep.begin();
        };
        Cut local{static_cast<std::size_t>(index_of(e[k].from)),
                  static_cast<std::size_t>(index_of(e[k].to))};
        if (!is_les_section(partial, local))
          fail(report, i, input,
               "extended-cut members stay erased sections of the remainder",
               cut_str(e[k]), to_string(partial));
      }
      (void)rem;
      (void)survivors;
    }

    // Independent count of the extended cuts: subsets of adc that are
    // pairwise non-overlapping once position sorted.
    std::size_t expected = 0;
    std::size_t n = admissible.size();
    if (n <= 20) {
      for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Cut> subset;
        for (std::size_t k = 0; k < n; ++k)
          if (mask & (std::size_t{1} << k)) subset.push_back(admissible[k]);
        std::sort(subset.begin(), subset.end());
        bool ok = true;
        for (std::size_t k = 0; k + 1 < subset.size(); ++k)
          ok &= subset[k].to < subset[k + 1].from;
        expected += ok;
      }
      if (expected != extended.size())
        fail(report, i, input,
             "extended-cut count matches the subset brute force",
             std::to_string(extended.size()), std::to_string(expected));
    }
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"copreLie", "coassoc",  "antipode", "dendriform",
          "brace",    "morphism", "cuts"};
}

CheckReport run_suite(const std::string& name, const GenConfig& cfg) {
  CheckReport report;
  report.suite = name;
  report.seed = cfg.seed;
  auto start = std::chrono::steady_clock::now();
  auto walks = gen_walks(cfg);
  if (name == "copreLie")
    suite_copre_lie(walks, report);
  else if (name == "coassoc")
    suite_coassoc(walks, report);
  else if (name == "antipode")
    suite_antipode(walks, report);
  else if (name == "dendriform")
    suite_dendriform(walks, report);
  else if (name == "brace")
    suite_brace(walks, report);
  else if (name == "morphism")
    suite_morphism(walks, cfg.seed, report);
  else if (name == "cuts")
    suite_cuts(walks, report);
  else
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
  auto elapsed = std::chrono::steady_clock::now() - start;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(elapsed).count();
  return report;
}

}  // namespace walkalg
