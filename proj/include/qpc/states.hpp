#pragma once

#include <cstdint>
#include <random>

#include "qpc/linalg.hpp"

namespace qpc {

struct MultipartiteState {
  ComplexMatrix rho;
  std::vector<int> dims;
};

struct SamplerConfig {
  std::vector<int> dims;
  int rank = 1;
  std::uint64_t seed = 0;
  int count = 1;
};

// Validates the density-matrix invariants and the dims product; throws
// std::invalid_argument on any breach.
MultipartiteState make_state(ComplexMatrix rho, std::vector<int> dims);

// Projector on (|000> + |111>)/sqrt(2), dims {2,2,2}.
MultipartiteState ghz_state();

// p |phi+><phi+| + (1-p) I/4 on two qubits.
MultipartiteState werner_state(double p);

// Rank-1 projector on the product basis vector |labels...>.
MultipartiteState basis_product_state(const std::vector<int>& labels,
                                      const std::vector<int>& dims);

// Haar-uniform pure state (first sample of the seed's stream).
MultipartiteState haar_pure(const std::vector<int>& dims, std::uint64_t seed);

// Induced-measure sample of fixed rank: rho = G G^dag / tr(G G^dag) with G a
// d x rank complex standard-Gaussian matrix. Keyed by (seed, index), so any
// sample can be produced independently of the others; rank 1 coincides with
// haar_pure bit for bit.
MultipartiteState haar_ranked_at(const std::vector<int>& dims, int rank,
                                 std::uint64_t seed, std::uint64_t index);

std::vector<MultipartiteState> haar_ranked(const SamplerConfig& cfg);

// Deterministic per-sample stream: splitmix64-keyed mt19937_64 plus an
// explicit Box-Muller transform, so sequences do not depend on the platform's
// std::normal_distribution implementation.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index);
  double uniform();  // (0, 1]
  double gaussian();
  Complex complex_gaussian();  // real part drawn first

 private:
  std::mt19937_64 gen_;
};

}  // namespace qpc
