#include "kah/batch.hpp"

#include <algorithm>
#include <exception>

namespace kah::batch {

namespace {

// Runs body(i) for i in [0, n). Exceptions must be caught inside body.
template <typename Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

// Forces the cached bases to be built before entering a parallel region.
void warm_caches() {
  mult_table();
  for (AlgebraTag t : {AlgebraTag::sl3C, AlgebraTag::g2C, AlgebraTag::spin7C, AlgebraTag::so7C,
                       AlgebraTag::so8C, AlgebraTag::su3, AlgebraTag::g2compact,
                       AlgebraTag::spin7compact, AlgebraTag::so7compact, AlgebraTag::so8compact})
    basis(t);
}

}  // namespace

std::vector<CMatrix> sample_group(GroupTag group, std::uint64_t seed, std::size_t count,
                                  double scale, Exec exec) {
  warm_caches();
  std::vector<CMatrix> out(count);
  for_each_index(count, exec, [&](std::size_t i) {
    out[i] = random_element(group, sample_seed(seed, i), scale);
  });
  return out;
}

std::vector<MembershipReport> classify_all(std::span<const CMatrix> gs, double tol, Exec exec) {
  warm_caches();
  std::vector<MembershipReport> out(gs.size());
  for_each_index(gs.size(), exec, [&](std::size_t i) { out[i] = classify(gs[i], tol); });
  return out;
}

std::vector<DecomposeOutcome> decompose_all(PairType pair, std::span<const CMatrix> gs,
                                            double tol, Exec exec) {
  warm_caches();
  std::vector<DecomposeOutcome> out(gs.size());
  for_each_index(gs.size(), exec, [&](std::size_t i) {
    DecomposeOutcome& o = out[i];
    try {
      o.factors = decompose(pair, gs[i], tol);
      o.k_residual = membership_residual(classify(o.factors.k), compact_group(pair));
      o.h_residual = membership_residual(classify(o.factors.h), subgroup(pair));
      o.ok = true;
    } catch (const std::exception& e) {
      o.error = e.what();
    }
  });
  return out;
}

std::vector<S2Outcome> check_s2_all(PairType pair, std::span<const CMatrix> gs, double s2_tol,
                                    double residual_tol, Exec exec) {
  warm_caches();
  std::vector<S2Outcome> out(gs.size());
  for_each_index(gs.size(), exec, [&](std::size_t i) {
    S2Outcome& o = out[i];
    try {
      const S2Report r = check_s2(pair, gs[i], s2_tol, residual_tol);
      o.residual = r.residual;
      o.v1_residual = r.factors.residual;
      o.ok = r.ok;
      if (!r.ok) o.error = "sigma0 witness not in H_C";
    } catch (const std::exception& e) {
      o.error = e.what();
    }
  });
  return out;
}

VisibleSummary run_visible(PairType pair, std::size_t samples, std::uint64_t seed, double scale,
                           double residual_tol, double s2_tol, Exec exec) {
  VisibleSummary s;
  s.pair = pair;
  s.samples = samples;
  s.seed = seed;
  s.scale = scale;
  s.s1_residual = check_s1(pair).max_residual;

  const std::vector<CMatrix> gs = sample_group(ambient_group(pair), seed, samples, scale, exec);
  const std::vector<S2Outcome> res = check_s2_all(pair, gs, s2_tol, residual_tol, exec);
  for (std::size_t i = 0; i < res.size(); ++i) {
    s.v1_residual = std::max(s.v1_residual, res[i].v1_residual);
    s.s2_residual = std::max(s.s2_residual, res[i].residual);
    if (!res[i].ok) {
      ++s.failures;
      s.errors.push_back("sample " + std::to_string(i) + ": " + res[i].error);
    }
  }
  s.ok = s.failures == 0 && s.s1_residual <= kS1Tol && s.v1_residual <= residual_tol &&
         s.s2_residual <= s2_tol;
  return s;
}

}  // namespace kah::batch
