#include "renyi/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renyi/rng.hpp"

namespace renyi {

AlgebraSpec::AlgebraSpec(std::vector<int> blocks_in, std::vector<double> weights_in)
    : blocks(std::move(blocks_in)), weights(std::move(weights_in)) {
  if (blocks.empty() || blocks.size() != weights.size()) {
    throw InvalidInput("AlgebraSpec: need matching, nonempty block and weight lists");
  }
  for (int n : blocks) {
    if (n < 1) throw InvalidInput("AlgebraSpec: block dimensions must be >= 1");
  }
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw InvalidInput("AlgebraSpec: trace weights must be strictly positive and finite");
    }
  }
}

int AlgebraSpec::total_dim() const {
  int t = 0;
  for (int n : blocks) t += n;
  return t;
}

bool AlgebraSpec::commutative() const {
  return std::all_of(blocks.begin(), blocks.end(), [](int n) { return n == 1; });
}

double AlgebraSpec::trace_of_identity() const {
  double t = 0.0;
  for (std::size_t i = 0; i < blocks.size(); ++i) t += weights[i] * blocks[i];
  return t;
}

AlgebraElement::AlgebraElement(const AlgebraSpec& spec, std::vector<ComplexMatrix> blocks)
    : blocks_(std::move(blocks)) {
  if (!shape_matches(spec)) throw InvalidInput("AlgebraElement: block shapes do not match spec");
}

AlgebraElement AlgebraElement::zero(const AlgebraSpec& spec) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(spec.blocks.size());
  for (int n : spec.blocks) blocks.emplace_back(n);
  return AlgebraElement(spec, std::move(blocks));
}

AlgebraElement AlgebraElement::identity(const AlgebraSpec& spec) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(spec.blocks.size());
  for (int n : spec.blocks) blocks.push_back(ComplexMatrix::identity(n));
  return AlgebraElement(spec, std::move(blocks));
}

bool AlgebraElement::shape_matches(const AlgebraSpec& spec) const {
  if (blocks_.size() != spec.blocks.size()) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].dim() != spec.blocks[i]) return false;
  }
  return true;
}

bool AlgebraElement::is_finite() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const ComplexMatrix& m) { return m.is_finite(); });
}

namespace {

void require_same_shape(const AlgebraElement& a, const AlgebraElement& b, const char* what) {
  if (a.block_count() != b.block_count()) throw InvalidInput(std::string(what) + ": block count mismatch");
  for (int i = 0; i < a.block_count(); ++i) {
    if (a.block(i).dim() != b.block(i).dim()) {
      throw InvalidInput(std::string(what) + ": block dimension mismatch");
    }
  }
}

AlgebraElement map_blocks(const AlgebraElement& a,
                          const std::function<ComplexMatrix(const ComplexMatrix&)>& f) {
  AlgebraElement r = a;
  for (int i = 0; i < r.block_count(); ++i) r.block(i) = f(a.block(i));
  return r;
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b, "element addition");
  AlgebraElement r = a;
  for (int i = 0; i < r.block_count(); ++i) r.block(i) += b.block(i);
  return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b, "element subtraction");
  AlgebraElement r = a;
  for (int i = 0; i < r.block_count(); ++i) r.block(i) -= b.block(i);
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b, "element product");
  AlgebraElement r = a;
  for (int i = 0; i < r.block_count(); ++i) r.block(i) = a.block(i) * b.block(i);
  return r;
}

AlgebraElement operator*(Complex s, const AlgebraElement& a) {
  return map_blocks(a, [s](const ComplexMatrix& m) { return s * m; });
}

AlgebraElement operator*(double s, const AlgebraElement& a) { return Complex(s, 0.0) * a; }

AlgebraElement adjoint(const AlgebraElement& a) {
  return map_blocks(a, [](const ComplexMatrix& m) { return m.adjoint(); });
}

AlgebraElement hermitize(const AlgebraElement& a) {
  return map_blocks(a, [](const ComplexMatrix& m) { return HermitianMatrix(m).matrix(); });
}

PositiveElement::PositiveElement(const AlgebraSpec& spec, const AlgebraElement& a,
                                 double hermitian_tol) {
  if (!a.shape_matches(spec)) throw InvalidInput("PositiveElement: shape mismatch");
  if (!a.is_finite()) throw InvalidInput("PositiveElement: non-finite entries");
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(a.block_count()));
  for (int i = 0; i < a.block_count(); ++i) {
    HermitianMatrix h(a.block(i));
    if (h.hermitization_residual() > hermitian_tol * std::max(1.0, a.block(i).max_abs())) {
      throw DomainError("PositiveElement: block is not Hermitian");
    }
    const auto ev = eig_hermitian(h).eigenvalues;
    if (!spectrum_positive(ev)) {
      throw DomainError("PositiveElement: block is not positive definite");
    }
    blocks.push_back(h.matrix());
  }
  value_ = AlgebraElement(spec, std::move(blocks));
}

DensityElement::DensityElement(const AlgebraSpec& spec, const PositiveElement& a) : value_(a) {
  const double t = trace(spec, a.element());
  if (std::abs(t - 1.0) > 1e-10) {
    throw DomainError("DensityElement: trace differs from 1 beyond tolerance");
  }
}

Complex trace_complex(const AlgebraSpec& spec, const AlgebraElement& a) {
  if (!a.shape_matches(spec)) throw InvalidInput("trace: shape mismatch");
  Complex t = 0.0;
  for (int i = 0; i < a.block_count(); ++i) {
    t += spec.weights[static_cast<std::size_t>(i)] * a.block(i).trace();
  }
  return t;
}

double trace(const AlgebraSpec& spec, const AlgebraElement& a) {
  const Complex t = trace_complex(spec, a);
  if (std::abs(t.imag()) > 1e-13 * std::max(1.0, std::abs(t.real()))) {
    throw NumericalFailure("trace: non-negligible imaginary part on expected-Hermitian input");
  }
  return t.real();
}

bool is_positive_definite(const AlgebraSpec& spec, const AlgebraElement& a,
                          double hermitian_tol) {
  if (!a.shape_matches(spec) || !a.is_finite()) return false;
  for (int i = 0; i < a.block_count(); ++i) {
    HermitianMatrix h(a.block(i));
    if (h.hermitization_residual() > hermitian_tol * std::max(1.0, a.block(i).max_abs())) {
      return false;
    }
    if (!spectrum_positive(eig_hermitian(h).eigenvalues)) return false;
  }
  return true;
}

DensityElement normalize_to_density(const AlgebraSpec& spec, const PositiveElement& a) {
  const double t = trace(spec, a.element());
  if (!(t > 0.0)) throw InvalidInput("normalize_to_density: non-positive trace");
  return DensityElement(spec, PositiveElement(spec, (1.0 / t) * a.element()));
}

bool is_central(const AlgebraSpec& spec, const AlgebraElement& a, double tol) {
  if (!a.shape_matches(spec) || !a.is_finite()) return false;
  for (int i = 0; i < a.block_count(); ++i) {
    const ComplexMatrix& m = a.block(i);
    const int n = m.dim();
    const Complex lam = m.trace() / static_cast<double>(n);
    const ComplexMatrix diff = m - lam * ComplexMatrix::identity(n);
    if (diff.max_abs() > tol * std::max(1.0, m.max_abs())) return false;
  }
  return true;
}

AlgebraElement central_element(const AlgebraSpec& spec, const std::vector<double>& scalars) {
  if (scalars.size() != spec.blocks.size()) {
    throw InvalidInput("central_element: one scalar per block required");
  }
  AlgebraElement r = AlgebraElement::identity(spec);
  for (int i = 0; i < r.block_count(); ++i) {
    r.block(i) *= Complex(scalars[static_cast<std::size_t>(i)], 0.0);
  }
  return r;
}

AlgebraElement random_hermitian(const AlgebraSpec& spec, std::uint64_t seed, double scale) {
  Rng rng(seed);
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(spec.blocks.size());
  for (int n : spec.blocks) {
    ComplexMatrix g(n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) g(r, c) = scale * rng.gaussian_complex();
    }
    blocks.push_back(HermitianMatrix(g).matrix());
  }
  return AlgebraElement(spec, std::move(blocks));
}

PositiveElement random_positive(const AlgebraSpec& spec, std::uint64_t seed, double scale) {
  return element_exp(spec, random_hermitian(spec, seed, scale));
}

DensityElement random_density(const AlgebraSpec& spec, std::uint64_t seed, double scale) {
  return normalize_to_density(spec, random_positive(spec, seed, scale));
}

AlgebraElement apply_scalar_function(const AlgebraSpec& spec, const AlgebraElement& a,
                                     const ScalarFunction& f) {
  if (!a.shape_matches(spec)) throw InvalidInput("apply_scalar_function: shape mismatch");
  return map_blocks(a, [&f](const ComplexMatrix& m) {
    return matrix_function(HermitianMatrix(m), f).matrix();
  });
}

PositiveElement element_power(const AlgebraSpec& spec, const PositiveElement& a, double p) {
  return PositiveElement(spec, apply_scalar_function(spec, a.element(), power_function(p)));
}

AlgebraElement element_log(const AlgebraSpec& spec, const PositiveElement& a) {
  return apply_scalar_function(spec, a.element(), log_function());
}

PositiveElement element_exp(const AlgebraSpec& spec, const AlgebraElement& hermitian) {
  return PositiveElement(spec, apply_scalar_function(spec, hermitian, exp_function()));
}

bool loewner_leq(const AlgebraSpec& spec, const AlgebraElement& a, const AlgebraElement& b,
                 double tol) {
  if (!a.shape_matches(spec) || !b.shape_matches(spec)) {
    throw InvalidInput("loewner_leq: shape mismatch");
  }
  for (int i = 0; i < a.block_count(); ++i) {
    if (!loewner_leq(HermitianMatrix(a.block(i)), HermitianMatrix(b.block(i)), tol)) return false;
  }
  return true;
}

double cstar_norm(const AlgebraSpec& spec, const AlgebraElement& a) {
  if (!a.shape_matches(spec)) throw InvalidInput("cstar_norm: shape mismatch");
  double n = 0.0;
  for (int i = 0; i < a.block_count(); ++i) n = std::max(n, operator_norm(a.block(i)));
  return n;
}

double min_eigenvalue(const AlgebraSpec& spec, const AlgebraElement& a) {
  if (!a.shape_matches(spec)) throw InvalidInput("min_eigenvalue: shape mismatch");
  double lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < a.block_count(); ++i) {
    lo = std::min(lo, lambda_min(HermitianMatrix(a.block(i))));
  }
  return lo;
}

}  // namespace renyi
