#include "walkalg/generate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "walkalg/cactus.hpp"

namespace walkalg {

std::vector<Walk> gen_walks(const GenConfig& cfg) {
  if (cfg.vertex_count < 1)
    throw std::invalid_argument("gen_walks: need at least one vertex");
  if (cfg.min_length > cfg.max_length)
    throw std::invalid_argument("gen_walks: empty length range");
  if (!cfg.allow_self_loops && cfg.vertex_count < 2)
    throw std::invalid_argument(
        "gen_walks: no loopless steps exist on a single vertex");

  std::mt19937_64 rng(cfg.seed);
  auto max_label = static_cast<VertexId>(cfg.vertex_count);
  std::uniform_int_distribution<std::size_t> length(cfg.min_length,
                                                    cfg.max_length);
  std::uniform_int_distribution<VertexId> vertex(1, max_label);
  std::uniform_int_distribution<VertexId> step(1, max_label - 1);

  std::vector<Walk> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    std::size_t steps = length(rng);
    std::vector<VertexId> labels{vertex(rng)};
    for (std::size_t k = 0; k < steps; ++k) {
      if (cfg.allow_self_loops) {
        labels.push_back(vertex(rng));
      } else {
        VertexId v = step(rng);
        labels.push_back(v >= labels.back() ? v + 1 : v);
      }
    }
    out.push_back(Walk(std::move(labels)));
  }
  return out;
}

Walk gen_tower(std::mt19937_64& rng, std::size_t cycle_count,
               std::size_t max_cycle_len) {
  if (cycle_count == 0)
    throw std::invalid_argument("gen_tower: need at least one cycle");
  if (max_cycle_len < 2 && cycle_count > 1)
    throw std::invalid_argument(
        "gen_tower: stacked cycles need length at least two");

  VertexId next = 1;
  // Innermost cycle: fresh root, fresh interior, any length >= 1.
  std::uniform_int_distribution<std::size_t> top_len(1, max_cycle_len);
  std::vector<VertexId> walk;
  {
    VertexId root = next++;
    std::size_t len = top_len(rng);
    walk.push_back(root);
    for (std::size_t k = 1; k < len; ++k) walk.push_back(next++);
    walk.push_back(root);
  }
  // Wrap the walk built so far into a fresh outer cycle that passes
  // through its root as an interior vertex.
  std::uniform_int_distribution<std::size_t> outer_len(2, std::max<std::size_t>(
                                                              2, max_cycle_len));
  for (std::size_t t = 1; t < cycle_count; ++t) {
    std::size_t len = outer_len(rng);
    std::size_t before =
        std::uniform_int_distribution<std::size_t>(0, len - 2)(rng);
    std::size_t after = len - 2 - before;
    VertexId root = next++;
    std::vector<VertexId> wrapped;
    wrapped.push_back(root);
    for (std::size_t k = 0; k < before; ++k) wrapped.push_back(next++);
    wrapped.insert(wrapped.end(), walk.begin(), walk.end());
    for (std::size_t k = 0; k < after; ++k) wrapped.push_back(next++);
    wrapped.push_back(root);
    walk = std::move(wrapped);
  }
  return canonical_relabel(Walk(std::move(walk)));
}

Walk gen_corolla(std::mt19937_64& rng, std::size_t petal_count,
                 std::size_t max_petal_len) {
  if (petal_count == 0)
    throw std::invalid_argument("gen_corolla: need at least one petal");

  VertexId root = 1;
  VertexId next = 2;
  std::vector<VertexId> walk{root};
  std::vector<VertexId> seen;  // non-root labels available for reuse
  std::uniform_int_distribution<std::size_t> petal_len(1, max_petal_len);
  std::bernoulli_distribution reuse(0.5);
  for (std::size_t t = 0; t < petal_count; ++t) {
    std::size_t len = petal_len(rng);
    // Interior labels must be distinct within the petal; labels from
    // earlier petals may reappear.
    std::vector<VertexId> pool = seen;
    for (std::size_t k = 1; k < len; ++k) {
      VertexId v;
      if (!pool.empty() && reuse(rng)) {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::size_t at = pick(rng);
        v = pool[at];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
      } else {
        v = next++;
        seen.push_back(v);
      }
      walk.push_back(v);
    }
    walk.push_back(root);
  }
  return canonical_relabel(Walk(std::move(walk)));
}

Walk gen_cactus(std::mt19937_64& rng, int vertex_count,
                std::size_t max_length) {
  if (vertex_count < 1)
    throw std::invalid_argument("gen_cactus: need at least one vertex");
  if (max_length < 1)
    throw std::invalid_argument("gen_cactus: need at least one step");
  std::uniform_int_distribution<std::size_t> length(1, max_length);
  std::uniform_int_distribution<VertexId> vertex(
      1, static_cast<VertexId>(vertex_count));
  std::size_t steps = length(rng);
  std::vector<VertexId> labels{vertex(rng)};
  for (std::size_t k = 1; k < steps; ++k) labels.push_back(vertex(rng));
  labels.push_back(labels.front());
  return canonical_relabel(cactus_map(Walk(std::move(labels))));
}

}  // namespace walkalg
