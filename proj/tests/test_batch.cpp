#include <doctest.h>

#include "kah/batch.hpp"
#include "test_util.hpp"

using namespace kah;
using namespace kah::batch;

TEST_CASE("sample_group: parallel output equals serial output bit for bit") {
  for (GroupTag tag : {GroupTag::G2C, GroupTag::Spin7C, GroupTag::SO7}) {
    const auto s = sample_group(tag, 9, 64, 1.5, Exec::Serial);
    const auto p = sample_group(tag, 9, 64, 1.5, Exec::Parallel);
    REQUIRE(s.size() == 64);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i] == p[i]);
      CHECK(s[i] == random_element(tag, sample_seed(9, i), 1.5));
    }
  }
}

TEST_CASE("classify_all matches serial classify") {
  const auto gs = sample_group(GroupTag::Spin7C, 3, 32, 1.0);
  const auto s = classify_all(gs, 1e-9, Exec::Serial);
  const auto p = classify_all(gs, 1e-9, Exec::Parallel);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    CHECK(s[i].companion_residual == p[i].companion_residual);
    CHECK(s[i].orthogonal_residual == p[i].orthogonal_residual);
    CHECK(s[i].has_triality_companion);
  }
}

TEST_CASE("decompose_all and check_s2_all agree across executors") {
  for (PairType pair : {PairType::R1, PairType::R1prime, PairType::R2}) {
    const auto gs = sample_group(ambient_group(pair), 17, 24, 2.0);
    const auto ds = decompose_all(pair, gs, 1e-7, Exec::Serial);
    const auto dp = decompose_all(pair, gs, 1e-7, Exec::Parallel);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      CHECK(ds[i].ok);
      CHECK(dp[i].ok);
      CHECK(ds[i].factors.k == dp[i].factors.k);
      CHECK(ds[i].factors.h == dp[i].factors.h);
      CHECK(ds[i].factors.theta == dp[i].factors.theta);
      CHECK(ds[i].k_residual <= 1e-8);
      CHECK(ds[i].h_residual <= 1e-8);
    }
    const auto ss = check_s2_all(pair, gs, kS2Tol, 1e-7, Exec::Serial);
    const auto sp = check_s2_all(pair, gs, kS2Tol, 1e-7, Exec::Parallel);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      CHECK(ss[i].ok);
      CHECK(ss[i].residual == sp[i].residual);
      CHECK(ss[i].v1_residual == sp[i].v1_residual);
    }
  }
}

TEST_CASE("decompose_all reports failures per sample") {
  std::vector<CMatrix> gs{CMatrix::Identity(), 2.0 * CMatrix::Identity()};
  const auto out = decompose_all(PairType::R2, gs);
  CHECK(out[0].ok);
  CHECK_FALSE(out[1].ok);
  CHECK_FALSE(out[1].error.empty());
}

TEST_CASE("run_visible summaries are executor independent") {
  for (PairType pair : {PairType::R1, PairType::R1prime, PairType::R2}) {
    const VisibleSummary s = run_visible(pair, 20, 4, 1.0, 1e-7, kS2Tol, Exec::Serial);
    const VisibleSummary p = run_visible(pair, 20, 4, 1.0, 1e-7, kS2Tol, Exec::Parallel);
    CHECK(s.ok);
    CHECK(s.failures == 0);
    CHECK(s.s1_residual == 0.0);
    CHECK(s.v1_residual == p.v1_residual);
    CHECK(s.s2_residual == p.s2_residual);
    CHECK(s.samples == 20);
  }
}
