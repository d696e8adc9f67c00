#pragma once

#include "sndp/instance.hpp"

#include <cstdint>
#include <optional>

namespace sndp {

// Deterministic 64-bit generator; all sampling goes through next_below so
// generated instances are a pure function of the seed.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next();
  // Uniform-enough value in [0, bound); bound > 0.
  std::uint64_t next_below(std::uint64_t bound);
  int next_in(int lo, int hi);  // inclusive range

 private:
  std::uint64_t state_;
};

struct GenParams {
  InstanceKind kind = InstanceKind::Ec;
  int n = 6;
  int count = 10;          // edges (ec, elem) or hyperedges (hyper)
  int max_degree = 3;      // hyper only: max hyperedge size
  int rmax = 1;
  int pair_count = 0;      // required pairs; 0 means max(1, n/2)
  long cost_lo = 1;
  long cost_hi = 10;
  int terminal_count = 0;  // elem only; 0 means max(2, n/2)
  std::uint64_t seed = 1;
};

// Deterministic for a fixed seed. Feasibility is guaranteed by planting a
// spanning structure over the required vertices and then verified by an
// exact flow check per required pair; inconsistent parameters are
// rejected with ValidationError.
Instance generate(const GenParams& params);

}  // namespace sndp
