#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qpc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Shared numerical tolerances. Eigenvalues in [-kPsdTol, 0) are treated as
// exact zeros; anything below -kPsdTol is rejected as non-PSD.
inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kTraceTol = 1e-9;

// Kronecker product, dimensions (rows_a*rows_b) x (cols_a*cols_b).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Trace out every party not listed in `keep`. Party 0 is the leftmost (most
// significant) tensor factor; `keep` must be strictly increasing. keep == all
// parties returns the input unchanged.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& dims,
                            const std::vector<int>& keep);

// Transpose the given party (or party set) of rho. Trace and Hermiticity are
// preserved exactly up to floating-point rounding.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const std::vector<int>& dims,
                                int party);
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const std::vector<int>& dims,
                                const std::vector<int>& parties);

// Reorder tensor factors: new position i holds the party order[i].
ComplexMatrix permute_parties(const ComplexMatrix& rho, const std::vector<int>& dims,
                              const std::vector<int>& order);

// Real eigenvalues of a Hermitian matrix, sorted descending.
std::vector<double> hermitian_spectrum(const ComplexMatrix& m);

// -sum lam*log2(lam) with 0*log 0 := 0 and the clamping rule above.
double entropy_bits(const std::vector<double>& eigenvalues);

// von Neumann entropy in bits; input must be a valid density matrix.
double von_neumann_entropy(const ComplexMatrix& rho);

// Shannon entropy in bits of a probability vector (sums to 1 within 1e-9).
double shannon_entropy(const std::vector<double>& p);

// Binary entropy h(e) in bits, 0 <= e <= 1.
double binary_entropy(double e);

// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

// Throws std::invalid_argument unless rho is Hermitian, PSD, and unit trace
// within the shared tolerances.
void check_density_matrix(const ComplexMatrix& rho);

}  // namespace qpc
