#pragma once

#include <span>
#include <string>
#include <vector>

#include "renyi/algebra.hpp"

namespace renyi {

// Direct evaluation is refused for |alpha - 1| below this guard: the
// 1/(alpha-1) prefactor amplifies eigensolver noise without bound. Callers
// wanting alpha -> 1 use alpha_limit instead.
inline constexpr double kAlphaGuard = 1e-6;

enum class Family {
  Conventional,
  Minimal,
  AlphaZ,
  Maximal,
  MosonyiOgawa,
  NormalizedMO,
  Umegaki,
  BelavkinStaszewski,
};

// Tagged choice of relative-entropy family with its parameters. Parametric
// kinds carry alpha (> 0, outside the guard band around 1); the alpha-z kind
// also carries z > 0. The maximal kind stays computable for alpha > 2 but is
// flagged: the structural results about it hold only for alpha <= 2.
class DivergenceKind {
 public:
  static DivergenceKind conventional(double alpha);
  static DivergenceKind minimal(double alpha);
  static DivergenceKind alpha_z(double alpha, double z);
  static DivergenceKind maximal(double alpha);
  static DivergenceKind mosonyi_ogawa(double alpha);
  static DivergenceKind normalized_mo(double alpha);
  static DivergenceKind umegaki();
  static DivergenceKind belavkin_staszewski();

  Family family() const { return family_; }
  double alpha() const { return alpha_; }
  double z() const { return z_; }

  bool parametric() const {
    return family_ != Family::Umegaki && family_ != Family::BelavkinStaszewski;
  }
  bool theorem_applicable() const {
    return !(family_ == Family::Maximal && alpha_ > 2.0);
  }

  // Same family with a different alpha (parametric kinds only).
  DivergenceKind with_alpha(double alpha) const;

  std::string name() const;

  friend bool operator==(const DivergenceKind&, const DivergenceKind&) = default;

 private:
  DivergenceKind(Family f, double alpha, double z) : family_(f), alpha_(alpha), z_(z) {}

  Family family_;
  double alpha_ = 0.0;
  double z_ = 0.0;
};

// The Q-quantities on the positive definite cone:
//   conventional     tau(A^a B^(1-a))
//   minimal          tau((B^((1-a)/2a) A B^((1-a)/2a))^a)
//   alpha-z          tau((B^((1-a)/2z) A^(a/z) B^((1-a)/2z))^z)
//   maximal          tau(B^(1/2) (B^(-1/2) A B^(-1/2))^a B^(1/2))
//   mosonyi-ogawa    tau(exp(a log A + (1-a) log B))
//   normalized-mo    mosonyi-ogawa / tau(A)
// Umegaki / Belavkin-Staszewski are not Q-quantities and are rejected here.
double q_value(const AlgebraSpec& spec, const DivergenceKind& kind, const PositiveElement& a,
               const PositiveElement& b);

// D = 1/(alpha-1) * ln Q for parametric kinds; the Umegaki and
// Belavkin-Staszewski kinds delegate to their own formulas. Defined on the
// whole cone; on densities this is the relative entropy proper.
double d_value(const AlgebraSpec& spec, const DivergenceKind& kind, const PositiveElement& a,
               const PositiveElement& b);

// tau(A (log A - log B)).
double umegaki(const AlgebraSpec& spec, const PositiveElement& a, const PositiveElement& b);

// tau(A log(A^(1/2) B^(-1) A^(1/2))).
double belavkin_staszewski(const AlgebraSpec& spec, const PositiveElement& a,
                           const PositiveElement& b);

struct AlphaLimitResult {
  double estimate = 0.0;           // Richardson-extrapolated value at alpha = 1
  std::vector<double> alphas;      // the schedule actually used
  std::vector<double> values;      // D at each schedule point
};

// Extrapolates D_alpha to alpha -> 1 along the given schedule (strictly
// monotone toward 1, entirely on one side, all outside the guard band).
// The limit target is umegaki for the conventional / minimal / alpha-z /
// mosonyi-ogawa families and belavkin_staszewski for the maximal family.
AlphaLimitResult alpha_limit(const AlgebraSpec& spec, const DivergenceKind& family,
                             const PositiveElement& a, const PositiveElement& b,
                             std::span<const double> schedule);

// Classical Renyi divergence on a commutative spec: all five parametric
// families coincide with 1/(alpha-1) * ln sum_i w_i p_i^alpha q_i^(1-alpha).
double classical_d_value(const AlgebraSpec& spec, double alpha, const PositiveElement& p,
                         const PositiveElement& q);

}  // namespace renyi
