#pragma once

#include <cstdint>
#include <random>

#include "sepkit/graph.hpp"

namespace sepkit {

// Deterministic RNG helpers. std::uniform_*_distribution is not pinned down
// by the standard, so sampling goes through these to keep generator output
// byte-identical across toolchains for a fixed seed.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  uint64_t below(uint64_t n) { return n == 0 ? 0 : eng_() % n; }
  double unit() { return double(eng_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 eng_;
};

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_grid(int rows, int cols);  // row-major ids
Graph gen_complete(int n);
Graph gen_complete_bipartite(int a, int b);
Graph gen_gnp(int n, double p, uint64_t seed);
Graph gen_random_bipartite(int a, int b, double p, uint64_t seed);

// Pairing-model 3-regular graph, resampled until simple and connected.
Graph gen_random_cubic(int n, uint64_t seed);

// G(n,p) conditioned on connectivity (redraws until connected).
Graph gen_connected_gnp(int n, double p, uint64_t seed);

}  // namespace sepkit
