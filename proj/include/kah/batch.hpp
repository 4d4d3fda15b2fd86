#pragma once

// Sample-parallel kernels. Every kernel has a serial reference and an OpenMP
// version; both write result i from input i only, so outputs are identical.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kah/visible.hpp"

namespace kah::batch {

enum class Exec { Serial, Parallel };

// Element i is random_element(group, sample_seed(seed, i), scale).
std::vector<CMatrix> sample_group(GroupTag group, std::uint64_t seed, std::size_t count,
                                  double scale, Exec exec = Exec::Parallel);

std::vector<MembershipReport> classify_all(std::span<const CMatrix> gs, double tol,
                                           Exec exec = Exec::Parallel);

struct DecomposeOutcome {
  bool ok = false;
  std::string error;
  KAHFactors factors;
  double k_residual = 0.0;  // G_u membership residual of k
  double h_residual = 0.0;  // H_C membership residual of h
};

std::vector<DecomposeOutcome> decompose_all(PairType pair, std::span<const CMatrix> gs,
                                            double tol = kDefaultResidualTol,
                                            Exec exec = Exec::Parallel);

struct S2Outcome {
  bool ok = false;
  std::string error;
  double residual = 0.0;
  double v1_residual = 0.0;  // reconstruction residual of the underlying decomposition
};

std::vector<S2Outcome> check_s2_all(PairType pair, std::span<const CMatrix> gs,
                                    double s2_tol = kS2Tol,
                                    double residual_tol = kDefaultResidualTol,
                                    Exec exec = Exec::Parallel);

// Aggregate over random samples of the pair's G_C: decomposition residual (v1),
// sigma0 on the slice (s1) and the sigma0 witness in H_C (s2).
struct VisibleSummary {
  PairType pair = PairType::R2;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double scale = 1.0;
  double v1_residual = 0.0;
  double s1_residual = 0.0;
  double s2_residual = 0.0;
  std::size_t failures = 0;
  std::vector<std::string> errors;  // ordered by sample index
  bool ok = false;
};

VisibleSummary run_visible(PairType pair, std::size_t samples, std::uint64_t seed, double scale,
                           double residual_tol = kDefaultResidualTol, double s2_tol = kS2Tol,
                           Exec exec = Exec::Parallel);

}  // namespace kah::batch
