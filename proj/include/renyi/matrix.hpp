#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "renyi/errors.hpp"

namespace renyi {

using Complex = std::complex<double>;

// An eigenvalue counts as positive iff lambda > kPdTol * max(1, lambda_max).
// Invertibility is enforced, never regularized.
inline constexpr double kPdTol = 1e-12;

// Dense square complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}
  ComplexMatrix(int dim, std::vector<Complex> entries);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(const std::vector<double>& d);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);

  int dim() const { return dim_; }

  Complex& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  const Complex& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * dim_ + c];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  bool is_finite() const;
  double max_abs() const;           // entrywise max modulus
  double frobenius_norm() const;
  double hermiticity_defect() const;  // max |a(i,j) - conj(a(j,i))|

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(double s, ComplexMatrix m);

// Hermitian matrix. The constructor symmetrizes the input via (M + M*)/2 and
// records how far the input was from being exactly Hermitian; downstream code
// can inspect that residual for diagnostics.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& m);

  static HermitianMatrix diagonal(const std::vector<double>& d);

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }
  double hermitization_residual() const { return residual_; }

 private:
  ComplexMatrix m_;
  double residual_ = 0.0;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, unitary
};

// Cyclic Jacobi eigensolver for complex Hermitian matrices. Sweep budget is
// 30 * dim^2; convergence once the off-diagonal Frobenius mass drops below
// 1e-14 * ||M||_F. Deterministic for fixed input.
EigenDecomposition eig_hermitian(const HermitianMatrix& m);

enum class FunctionDomain {
  AllReals,
  NonNegative,   // eigenvalues within -kPdTol*scale of zero are clamped to 0
  PositiveOnly,  // requires lambda_min > kPdTol * max(1, lambda_max)
};

// Scalar function lifted to Hermitian matrices through the spectral theorem.
// `derivative` may be empty when the caller never differentiates.
struct ScalarFunction {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  FunctionDomain domain = FunctionDomain::AllReals;
};

ScalarFunction identity_function();
ScalarFunction exp_function();
ScalarFunction log_function();
// p < 0 requires a positive spectrum; non-integer p >= 0 a nonnegative one.
ScalarFunction power_function(double p);

// f(M) = V f(Lambda) V*. Output is Hermitized; use hermitization_residual()
// on the result for diagnostics.
HermitianMatrix matrix_function(const HermitianMatrix& m, const ScalarFunction& f);

// Loewner order check: true iff lambda_min(B - A) >= -tol * max(1,||A||,||B||).
bool loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b, double tol);

// Largest singular value (the C*-norm on a full matrix algebra); for Hermitian
// input this equals the largest absolute eigenvalue.
double operator_norm(const ComplexMatrix& m);

double lambda_min(const HermitianMatrix& m);
double lambda_max(const HermitianMatrix& m);

// True iff the ascending spectrum is positive definite in the kPdTol sense.
bool spectrum_positive(const std::vector<double>& ascending_eigenvalues);

}  // namespace renyi
