#pragma once

#include <cstdint>
#include <vector>

#include "renyi/matrix.hpp"

namespace renyi {

// A finite direct sum of full complex matrix blocks together with strictly
// positive trace weights: tau(A) = sum_i w_i Tr(A_i). Positive weights make
// the trace faithful; they are deliberately not normalized, so tau(I) is
// whatever the weights say it is.
struct AlgebraSpec {
  std::vector<int> blocks;
  std::vector<double> weights;

  AlgebraSpec() = default;
  AlgebraSpec(std::vector<int> blocks_in, std::vector<double> weights_in);

  int block_count() const { return static_cast<int>(blocks.size()); }
  int total_dim() const;
  bool commutative() const;  // all blocks 1x1
  double trace_of_identity() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

// A general element: one complex matrix per block.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(const AlgebraSpec& spec, std::vector<ComplexMatrix> blocks);

  static AlgebraElement zero(const AlgebraSpec& spec);
  static AlgebraElement identity(const AlgebraSpec& spec);

  int block_count() const { return static_cast<int>(blocks_.size()); }
  ComplexMatrix& block(int i) { return blocks_[static_cast<std::size_t>(i)]; }
  const ComplexMatrix& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }

  bool shape_matches(const AlgebraSpec& spec) const;
  bool is_finite() const;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::vector<ComplexMatrix> blocks_;
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);  // blockwise product
AlgebraElement operator*(Complex s, const AlgebraElement& a);
AlgebraElement operator*(double s, const AlgebraElement& a);
AlgebraElement adjoint(const AlgebraElement& a);

// Membership in the positive definite cone: Hermitian blocks with
// lambda_min > kPdTol * max(1, lambda_max). The constructor enforces the
// invariant (Hermitizing within `hermitian_tol`) and throws DomainError
// otherwise.
class PositiveElement {
 public:
  PositiveElement(const AlgebraSpec& spec, const AlgebraElement& a,
                  double hermitian_tol = 1e-10);

  const AlgebraElement& element() const { return value_; }
  const ComplexMatrix& block(int i) const { return value_.block(i); }
  int block_count() const { return value_.block_count(); }

 private:
  AlgebraElement value_;
};

// An invertible density: positive definite with tau(A) = 1 within 1e-10.
class DensityElement {
 public:
  DensityElement(const AlgebraSpec& spec, const PositiveElement& a);

  const PositiveElement& positive() const { return value_; }
  const AlgebraElement& element() const { return value_.element(); }
  operator const PositiveElement&() const { return value_; }

 private:
  PositiveElement value_;
};

// tau(A) = sum_i w_i Tr(A_i).
Complex trace_complex(const AlgebraSpec& spec, const AlgebraElement& a);
// Real trace for (numerically) Hermitian input; imaginary parts up to 1e-13
// relative are dropped, anything larger raises NumericalFailure.
double trace(const AlgebraSpec& spec, const AlgebraElement& a);

bool is_positive_definite(const AlgebraSpec& spec, const AlgebraElement& a,
                          double hermitian_tol = 1e-10);

DensityElement normalize_to_density(const AlgebraSpec& spec, const PositiveElement& a);

// True iff every block is within tol of a scalar multiple of its identity.
bool is_central(const AlgebraSpec& spec, const AlgebraElement& a, double tol);

// A central element from per-block scalars.
AlgebraElement central_element(const AlgebraSpec& spec, const std::vector<double>& scalars);

// Gaussian Hermitian element: blocks (G + G*)/2 with iid complex normal
// entries of the given scale. Deterministic per seed.
AlgebraElement random_hermitian(const AlgebraSpec& spec, std::uint64_t seed, double scale);
// exp(H) with H Gaussian Hermitian; positive definite by construction.
PositiveElement random_positive(const AlgebraSpec& spec, std::uint64_t seed, double scale = 1.0);
DensityElement random_density(const AlgebraSpec& spec, std::uint64_t seed, double scale = 1.0);

// Blockwise continuous function calculus. Blocks are Hermitized on entry.
AlgebraElement apply_scalar_function(const AlgebraSpec& spec, const AlgebraElement& a,
                                     const ScalarFunction& f);
PositiveElement element_power(const AlgebraSpec& spec, const PositiveElement& a, double p);
AlgebraElement element_log(const AlgebraSpec& spec, const PositiveElement& a);
PositiveElement element_exp(const AlgebraSpec& spec, const AlgebraElement& hermitian);

// Blockwise Loewner order on (numerically Hermitian) elements.
bool loewner_leq(const AlgebraSpec& spec, const AlgebraElement& a, const AlgebraElement& b,
                 double tol);

// The C*-norm of the direct sum: max over blocks of the operator norm.
double cstar_norm(const AlgebraSpec& spec, const AlgebraElement& a);

// Smallest block eigenvalue across the element (blocks Hermitized first).
double min_eigenvalue(const AlgebraSpec& spec, const AlgebraElement& a);

AlgebraElement hermitize(const AlgebraElement& a);

}  // namespace renyi
