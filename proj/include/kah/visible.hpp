#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "kah/decompose.hpp"

namespace kah {

// I+- conj(g) I+- with I+- = diag(1,-1,1,-1,1,-1,1,-1).
CMatrix sigma0(const CMatrix& g);

inline constexpr std::array<double, 7> kSliceGrid{-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0};
inline constexpr double kS1Tol = 1e-12;
inline constexpr double kS2Tol = 1e-6;

struct S1Report {
  PairType pair = PairType::R2;
  double max_residual = 0.0;  // max ||sigma0(a) - a||_F over kSliceGrid
  bool ok = false;
};

S1Report check_s1(PairType pair);

struct S2Report {
  PairType pair = PairType::R2;
  KAHFactors factors;
  // H_C membership residual of m = (sigma0(k) k^{-1} g)^{-1} sigma0(g).
  double residual = 0.0;
  bool ok = false;
};

S2Report check_s2(PairType pair, const CMatrix& g, double tol = kS2Tol,
                  double residual_tol = kDefaultResidualTol);

// Real basis of {X in span_C(basis(tag)) : sigma0(X) = X}. tag must be one of
// g2C, spin7C, so7C, so8C.
SubalgebraBasis fixed_subalgebra(AlgebraTag tag, double tol = kDefaultMembershipTol);

struct RealFormReport {
  AlgebraTag tag = AlgebraTag::g2C;
  int dim_fixed = 0;
  int dim_k = 0;  // theta-fixed part of the real form
  int dim_p = 0;  // theta-antifixed part
  Signature signature;
  int real_rank_estimate = 0;
  std::vector<int> rank_trials;
  bool inconclusive = false;
};

inline constexpr int kRankTrials = 5;

RealFormReport real_form_report(AlgebraTag tag, std::uint64_t seed = 0,
                                double tol = kDefaultMembershipTol);

}  // namespace kah
