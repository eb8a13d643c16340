#include "qpc/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Eigen::Index dims_product(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("empty dimension list");
  Eigen::Index d = 1;
  for (int x : dims) {
    if (x < 1) throw std::invalid_argument("local dimensions must be positive");
    d *= x;
  }
  return d;
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index)
    : gen_(splitmix64(splitmix64(seed) + index)) {}

double SampleRng::uniform() {
  // 53-bit mantissa shifted into (0, 1] so log() below is always finite.
  return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
}

double SampleRng::gaussian() {
  double u1 = uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex SampleRng::complex_gaussian() {
  double re = gaussian();
  double im = gaussian();
  return {re, im};
}

MultipartiteState make_state(ComplexMatrix rho, std::vector<int> dims) {
  Eigen::Index d = dims_product(dims);
  if (rho.rows() != d || rho.cols() != d)
    throw std::invalid_argument("matrix size does not match the dimension list");
  check_density_matrix(rho);
  return {std::move(rho), std::move(dims)};
}

MultipartiteState ghz_state() {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
  psi(0) = psi(7) = 1.0 / std::sqrt(2.0);
  return {psi * psi.adjoint(), {2, 2, 2}};
}

MultipartiteState werner_state(double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("Werner parameter out of [0, 1]");
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  ComplexMatrix rho = p * (phi * phi.adjoint()).eval() +
                      (1.0 - p) * 0.25 * ComplexMatrix::Identity(4, 4);
  return {std::move(rho), {2, 2}};
}

MultipartiteState basis_product_state(const std::vector<int>& labels,
                                      const std::vector<int>& dims) {
  Eigen::Index d = dims_product(dims);
  if (labels.size() != dims.size())
    throw std::invalid_argument("one basis label per party required");
  Eigen::Index idx = 0;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= dims[i])
      throw std::invalid_argument("basis label out of range");
    idx = idx * dims[i] + labels[i];
  }
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  rho(idx, idx) = 1.0;
  return {std::move(rho), dims};
}

MultipartiteState haar_ranked_at(const std::vector<int>& dims, int rank,
                                 std::uint64_t seed, std::uint64_t index) {
  Eigen::Index d = dims_product(dims);
  if (rank < 1 || rank > d)
    throw std::invalid_argument("rank must lie in [1, total dimension]");
  SampleRng rng(seed, index);
  ComplexMatrix g(d, rank);
  for (Eigen::Index i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = rng.complex_gaussian();
  ComplexMatrix rho = g * g.adjoint();
  ComplexMatrix sym = 0.5 * (rho + rho.adjoint());
  sym /= sym.trace().real();
  return {std::move(sym), dims};
}

MultipartiteState haar_pure(const std::vector<int>& dims, std::uint64_t seed) {
  return haar_ranked_at(dims, 1, seed, 0);
}

std::vector<MultipartiteState> haar_ranked(const SamplerConfig& cfg) {
  if (cfg.count < 1) throw std::invalid_argument("sample count must be positive");
  std::vector<MultipartiteState> out;
  out.reserve(cfg.count);
  for (int i = 0; i < cfg.count; ++i)
    out.push_back(haar_ranked_at(cfg.dims, cfg.rank, cfg.seed, i));
  return out;
}

}  // namespace qpc
