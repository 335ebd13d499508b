#ifndef WALKALG_GENERATE_HPP
#define WALKALG_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "walkalg/walk.hpp"

namespace walkalg {

// Random-walk generation for the property suites. Walks run on the
// complete digraph over {1..vertex_count}, optionally with self loops.
struct GenConfig {
  int vertex_count = 5;
  std::size_t min_length = 1;   // number of steps, not vertices
  std::size_t max_length = 12;
  std::size_t count = 500;
  std::uint64_t seed = 0;
  bool allow_self_loops = true;
};

std::vector<Walk> gen_walks(const GenConfig& cfg);

// Closed-walk generators for shape-specific suites. Each draws from the
// same engine so a fixed seed reproduces the sample.
Walk gen_tower(std::mt19937_64& rng, std::size_t cycle_count,
               std::size_t max_cycle_len);
Walk gen_corolla(std::mt19937_64& rng, std::size_t petal_count,
                 std::size_t max_petal_len);
Walk gen_cactus(std::mt19937_64& rng, int vertex_count,
                std::size_t max_length);

}  // namespace walkalg

#endif  // WALKALG_GENERATE_HPP
