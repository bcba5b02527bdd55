#include "renyi/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace renyi {

namespace {

double off_diagonal_frobenius(const ComplexMatrix& a) {
  const int n = a.dim();
  double sum = 0.0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (r != c) sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), a_(std::move(entries)) {
  if (dim < 0 || a_.size() != static_cast<std::size_t>(dim) * dim) {
    throw InvalidInput("ComplexMatrix: entry count does not match dimension");
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i);
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::is_finite() const {
  for (const Complex& v : a_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& v : a_) sum += std::norm(v);
  return std::sqrt(sum);
}

double ComplexMatrix::hermiticity_defect() const {
  double d = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw InvalidInput("matrix addition: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw InvalidInput("matrix subtraction: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw InvalidInput("matrix product: dimension mismatch");
  const int n = lhs.dim();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex v = lhs(i, k);
      if (v == Complex{}) continue;
      for (int j = 0; j < n; ++j) r(i, j) += v * rhs(k, j);
    }
  }
  return r;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(double s, ComplexMatrix m) { return m *= Complex(s, 0.0); }

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) : m_(m.dim()) {
  if (m.dim() < 1) throw InvalidInput("HermitianMatrix: dimension must be >= 1");
  if (!m.is_finite()) throw InvalidInput("HermitianMatrix: non-finite entries");
  residual_ = 0.5 * m.hermiticity_defect();
  const int n = m.dim();
  for (int i = 0; i < n; ++i) {
    m_(i, i) = Complex(m(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m_(i, j) = v;
      m_(j, i) = std::conj(v);
    }
  }
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
  return HermitianMatrix(ComplexMatrix::diagonal(d));
}

EigenDecomposition eig_hermitian(const HermitianMatrix& h) {
  const int n = h.dim();
  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double fro = a.frobenius_norm();
  const double stop = 1e-14 * fro;
  const long max_sweeps = 30L * n * n;

  bool converged = (n == 1) || off_diagonal_frobenius(a) <= stop;
  for (long sweep = 0; !converged && sweep < std::max<long>(max_sweeps, 1); ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double ab = std::abs(b);
        if (ab == 0.0) continue;

        const Complex phase = b / ab;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * ab);
        const double sgn = theta >= 0.0 ? 1.0 : -1.0;
        const double t = sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const Complex s = (t * c) * phase;

        // A <- U* A U and V <- V U with U = [[c, s], [-conj(s), c]] acting on
        // the (p, q) plane.
        for (int r = 0; r < n; ++r) {
          const Complex arp = a(r, p);
          const Complex arq = a(r, q);
          a(r, p) = c * arp - std::conj(s) * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (int cidx = 0; cidx < n; ++cidx) {
          const Complex apc = a(p, cidx);
          const Complex aqc = a(q, cidx);
          a(p, cidx) = c * apc - s * aqc;
          a(q, cidx) = std::conj(s) * apc + c * aqc;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);

        for (int r = 0; r < n; ++r) {
          const Complex vrp = v(r, p);
          const Complex vrq = v(r, q);
          v(r, p) = c * vrp - std::conj(s) * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
    converged = off_diagonal_frobenius(a) <= stop;
  }
  if (!converged) {
    throw NumericalFailure("eig_hermitian: Jacobi sweeps exhausted without convergence");
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition ed;
  ed.eigenvalues.resize(static_cast<std::size_t>(n));
  ed.eigenvectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    ed.eigenvalues[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)],
                                                    order[static_cast<std::size_t>(k)])
                                                      .real();
    for (int r = 0; r < n; ++r) ed.eigenvectors(r, k) = v(r, order[static_cast<std::size_t>(k)]);
  }
  return ed;
}

ScalarFunction identity_function() {
  return {"id", [](double t) { return t; }, [](double) { return 1.0; },
          FunctionDomain::AllReals};
}

ScalarFunction exp_function() {
  return {"exp", [](double t) { return std::exp(t); }, [](double t) { return std::exp(t); },
          FunctionDomain::AllReals};
}

ScalarFunction log_function() {
  return {"log", [](double t) { return std::log(t); }, [](double t) { return 1.0 / t; },
          FunctionDomain::PositiveOnly};
}

ScalarFunction power_function(double p) {
  FunctionDomain domain = FunctionDomain::AllReals;
  const bool integral = p == std::floor(p);
  if (p < 0.0) {
    domain = FunctionDomain::PositiveOnly;
  } else if (!integral) {
    domain = FunctionDomain::NonNegative;
  }
  return {"pow(" + std::to_string(p) + ")",
          [p](double t) { return std::pow(t, p); },
          [p](double t) { return p * std::pow(t, p - 1.0); }, domain};
}

HermitianMatrix matrix_function(const HermitianMatrix& m, const ScalarFunction& f) {
  EigenDecomposition ed = eig_hermitian(m);
  const double top = std::abs(ed.eigenvalues.back());
  const double bottom = ed.eigenvalues.front();

  switch (f.domain) {
    case FunctionDomain::PositiveOnly:
      if (!spectrum_positive(ed.eigenvalues)) {
        throw DomainError("matrix_function: " + f.name + " requires a positive spectrum");
      }
      break;
    case FunctionDomain::NonNegative:
      if (bottom < -kPdTol * std::max(1.0, top)) {
        throw DomainError("matrix_function: " + f.name + " requires a nonnegative spectrum");
      }
      break;
    case FunctionDomain::AllReals:
      break;
  }

  const int n = m.dim();
  std::vector<double> fvals(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double lam = ed.eigenvalues[static_cast<std::size_t>(i)];
    if (f.domain == FunctionDomain::NonNegative && lam < 0.0) lam = 0.0;
    const double fv = f.value(lam);
    if (!std::isfinite(fv)) {
      throw NumericalFailure("matrix_function: " + f.name + " produced a non-finite value");
    }
    fvals[static_cast<std::size_t>(i)] = fv;
  }

  // V f(Lambda) V*
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (int k = 0; k < n; ++k) {
        sum += ed.eigenvectors(i, k) * fvals[static_cast<std::size_t>(k)] *
               std::conj(ed.eigenvectors(j, k));
      }
      r(i, j) = sum;
    }
  }
  return HermitianMatrix(r);
}

bool loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  if (a.dim() != b.dim()) throw InvalidInput("loewner_leq: dimension mismatch");
  const HermitianMatrix diff(b.matrix() - a.matrix());
  const auto hermitian_norm = [](const HermitianMatrix& m) {
    const auto ev = eig_hermitian(m).eigenvalues;
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
  };
  const double scale = std::max({1.0, hermitian_norm(a), hermitian_norm(b)});
  return lambda_min(diff) >= -tol * scale;
}

double operator_norm(const ComplexMatrix& m) {
  if (!m.is_finite()) throw InvalidInput("operator_norm: non-finite entries");
  if (m.dim() == 0) return 0.0;
  const HermitianMatrix gram(m.adjoint() * m);
  const double top = lambda_max(gram);
  return std::sqrt(std::max(top, 0.0));
}

double lambda_min(const HermitianMatrix& m) { return eig_hermitian(m).eigenvalues.front(); }

double lambda_max(const HermitianMatrix& m) { return eig_hermitian(m).eigenvalues.back(); }

bool spectrum_positive(const std::vector<double>& ascending) {
  if (ascending.empty()) return false;
  return ascending.front() > kPdTol * std::max(1.0, ascending.back());
}

}  // namespace renyi
