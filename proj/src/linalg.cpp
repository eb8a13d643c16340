#include "qpc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qpc {

namespace {

Eigen::Index dims_product(const std::vector<int>& dims) {
  Eigen::Index d = 1;
  for (int x : dims) d *= x;
  return d;
}

void check_dims(const ComplexMatrix& rho, const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("empty dimension list");
  for (int x : dims)
    if (x < 1) throw std::invalid_argument("local dimensions must be positive");
  Eigen::Index d = dims_product(dims);
  if (rho.rows() != d || rho.cols() != d)
    throw std::invalid_argument("matrix size does not match the dimension list");
}

void check_party_set(const std::vector<int>& parties, int n) {
  for (size_t i = 0; i < parties.size(); ++i) {
    if (parties[i] < 0 || parties[i] >= n)
      throw std::invalid_argument("party index out of range");
    if (i > 0 && parties[i] <= parties[i - 1])
      throw std::invalid_argument("party set must be strictly increasing");
  }
}

// Flat offsets of the mixed-radix indices running over `parties` only, with
// the remaining digits held at zero. Parties keep their original significance.
std::vector<Eigen::Index> subsystem_offsets(const std::vector<int>& dims,
                                            const std::vector<int>& parties) {
  int n = static_cast<int>(dims.size());
  std::vector<Eigen::Index> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
  Eigen::Index total = 1;
  for (int p : parties) total *= dims[p];
  std::vector<Eigen::Index> off(total);
  for (Eigen::Index k = 0; k < total; ++k) {
    Eigen::Index rem = k, o = 0;
    for (int i = static_cast<int>(parties.size()) - 1; i >= 0; --i) {
      int p = parties[i];
      o += (rem % dims[p]) * stride[p];
      rem /= dims[p];
    }
    off[k] = o;
  }
  return off;
}

std::vector<int> complement_of(const std::vector<int>& parties, int n) {
  std::vector<int> rest;
  size_t j = 0;
  for (int p = 0; p < n; ++p) {
    if (j < parties.size() && parties[j] == p)
      ++j;
    else
      rest.push_back(p);
  }
  return rest;
}

}  // namespace

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  check_dims(rho, dims);
  if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
  int n = static_cast<int>(dims.size());
  check_party_set(keep, n);
  if (static_cast<int>(keep.size()) == n) return rho;

  std::vector<int> drop = complement_of(keep, n);
  auto off_k = subsystem_offsets(dims, keep);
  auto off_d = subsystem_offsets(dims, drop);
  Eigen::Index dk = static_cast<Eigen::Index>(off_k.size());
  ComplexMatrix out(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r)
    for (Eigen::Index c = 0; c < dk; ++c) {
      Complex acc = 0;
      for (Eigen::Index t : off_d) acc += rho(off_k[r] + t, off_k[c] + t);
      out(r, c) = acc;
    }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const std::vector<int>& dims,
                                const std::vector<int>& parties) {
  check_dims(rho, dims);
  int n = static_cast<int>(dims.size());
  check_party_set(parties, n);
  if (parties.empty()) return rho;

  std::vector<int> rest = complement_of(parties, n);
  auto off_p = subsystem_offsets(dims, parties);
  auto off_r = subsystem_offsets(dims, rest);
  ComplexMatrix out(rho.rows(), rho.cols());
  for (Eigen::Index sr : off_p)
    for (Eigen::Index sc : off_p)
      for (Eigen::Index tr : off_r)
        for (Eigen::Index tc : off_r)
          out(sc + tr, sr + tc) = rho(sr + tr, sc + tc);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const std::vector<int>& dims,
                                int party) {
  return partial_transpose(rho, dims, std::vector<int>{party});
}

ComplexMatrix permute_parties(const ComplexMatrix& rho, const std::vector<int>& dims,
                              const std::vector<int>& order) {
  check_dims(rho, dims);
  int n = static_cast<int>(dims.size());
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("order must list every party exactly once");
  std::vector<bool> seen(n, false);
  for (int p : order) {
    if (p < 0 || p >= n || seen[p])
      throw std::invalid_argument("order must list every party exactly once");
    seen[p] = true;
  }

  std::vector<Eigen::Index> stride(n, 1), new_stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
  for (int i = n - 2; i >= 0; --i) new_stride[i] = new_stride[i + 1] * dims[order[i + 1]];

  Eigen::Index d = rho.rows();
  std::vector<Eigen::Index> map(d);
  for (Eigen::Index f = 0; f < d; ++f) {
    Eigen::Index rem = f, to = 0;
    std::vector<Eigen::Index> digit(n);
    for (int p = n - 1; p >= 0; --p) {
      digit[p] = rem % dims[p];
      rem /= dims[p];
    }
    for (int i = 0; i < n; ++i) to += digit[order[i]] * new_stride[i];
    map[f] = to;
  }
  ComplexMatrix out(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) out(map[r], map[c]) = rho(r, c);
  return out;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

std::vector<double> hermitian_spectrum(const ComplexMatrix& m) {
  if (!is_hermitian(m)) throw std::invalid_argument("matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> lam(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return lam;
}

double entropy_bits(const std::vector<double>& eigenvalues) {
  double s = 0;
  for (double lam : eigenvalues) {
    if (lam < -kPsdTol)
      throw std::invalid_argument("eigenvalue " + std::to_string(lam) + " below -1e-9");
    if (lam > 0) s -= lam * std::log2(lam);
  }
  return s;
}

void check_density_matrix(const ComplexMatrix& rho) {
  if (!is_hermitian(rho)) throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > kTraceTol)
    throw std::invalid_argument("density matrix trace differs from 1");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTol)
    throw std::invalid_argument("density matrix is not positive semidefinite");
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  if (!is_hermitian(rho)) throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > kTraceTol)
    throw std::invalid_argument("density matrix trace differs from 1");
  return entropy_bits(hermitian_spectrum(rho));
}

double shannon_entropy(const std::vector<double>& p) {
  if (p.empty()) throw std::invalid_argument("empty probability vector");
  double sum = 0;
  for (double x : p) {
    if (x < 0 || x > 1 + kTraceTol)
      throw std::invalid_argument("probability out of [0, 1]");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kTraceTol)
    throw std::invalid_argument("probabilities do not sum to 1");
  double h = 0;
  for (double x : p)
    if (x > 0) h -= x * std::log2(x);
  return h;
}

double binary_entropy(double e) {
  if (e < 0 || e > 1) throw std::invalid_argument("binary entropy argument out of [0, 1]");
  double h = 0;
  if (e > 0) h -= e * std::log2(e);
  if (e < 1) h -= (1 - e) * std::log2(1 - e);
  return h;
}

double trace_norm(const ComplexMatrix& m) {
  double t = 0;
  for (double lam : hermitian_spectrum(m)) t += std::abs(lam);
  return t;
}

}  // namespace qpc
