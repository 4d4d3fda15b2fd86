#include "kah/visible.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "kah/errors.hpp"

namespace kah {

CMatrix sigma0(const CMatrix& g) {
  const CMatrix& ipm = i_plus_minus();
  return ipm * g.conjugate() * ipm;
}

S1Report check_s1(PairType pair) {
  S1Report r;
  r.pair = pair;
  for (double t : kSliceGrid) {
    const CMatrix a = one_param(slice_kind(pair), t).matrix;
    r.max_residual = std::max(r.max_residual, (sigma0(a) - a).norm());
  }
  r.ok = r.max_residual <= kS1Tol;
  return r;
}

S2Report check_s2(PairType pair, const CMatrix& g, double tol, double residual_tol) {
  S2Report r;
  r.pair = pair;
  r.factors = decompose(pair, g, residual_tol);
  const CMatrix& k = r.factors.k;
  // k is real orthogonal and g is complex orthogonal: inverses are transposes.
  const CMatrix u = sigma0(k) * k.transpose();
  const CMatrix m = (u * g).transpose() * sigma0(g);
  r.residual = membership_residual(classify(m, tol), subgroup(pair));
  r.ok = r.residual <= tol;
  return r;
}

namespace {

Eigen::VectorXd real_coords(const CMatrix& m) {
  Eigen::VectorXd v(128);
  for (int j = 0; j < 8; ++j)
    for (int r = 0; r < 8; ++r) {
      v(8 * j + r) = m(r, j).real();
      v(64 + 8 * j + r) = m(r, j).imag();
    }
  return v;
}

// Maximal independent subset (index order) of elems over R.
std::vector<CMatrix> independent_real(const std::vector<CMatrix>& elems, double tol) {
  std::vector<CMatrix> out;
  for (const CMatrix& e : elems) {
    if (e.cwiseAbs().maxCoeff() <= tol) continue;
    out.push_back(e);
    if (span_rank(out, SpanField::Real, tol) < static_cast<int>(out.size())) out.pop_back();
  }
  return out;
}

}  // namespace

SubalgebraBasis fixed_subalgebra(AlgebraTag tag, double tol) {
  if (tag != AlgebraTag::g2C && tag != AlgebraTag::spin7C && tag != AlgebraTag::so7C &&
      tag != AlgebraTag::so8C)
    throw std::invalid_argument("fixed_subalgebra: unsupported algebra");
  const SubalgebraBasis& b = basis(tag);
  const auto n = static_cast<Eigen::Index>(b.size());
  // X = sum (a_k + i b_k) B_k; unknowns (a, b) in R^{2n}. sigma0 is real-linear.
  DynRMatrix sys(128, 2 * n);
  std::vector<CMatrix> real_gens;
  for (Eigen::Index k = 0; k < n; ++k) {
    const CMatrix& e = b.elements[k];
    const CMatrix ie = cplx{0.0, 1.0} * e;
    real_gens.push_back(e);
    real_gens.push_back(ie);
    sys.col(2 * k) = real_coords(sigma0(e) - e);
    sys.col(2 * k + 1) = real_coords(sigma0(ie) - ie);
  }
  const DynRMatrix ns = nullspace_real(sys, tol);
  SubalgebraBasis out{tag, {}, SpanField::Real};
  for (Eigen::Index c = 0; c < ns.cols(); ++c) {
    CMatrix x = CMatrix::Zero();
    for (Eigen::Index k = 0; k < 2 * n; ++k) x += ns(k, c) * real_gens[k];
    out.elements.push_back(x);
  }
  return out;
}

RealFormReport real_form_report(AlgebraTag tag, std::uint64_t seed, double tol) {
  RealFormReport rep;
  rep.tag = tag;
  const SubalgebraBasis f = fixed_subalgebra(tag, tol);
  rep.dim_fixed = static_cast<int>(f.size());

  std::vector<CMatrix> kparts, pparts;
  for (const CMatrix& x : f.elements) {
    kparts.push_back(0.5 * (x + cartan_theta(x)));
    pparts.push_back(0.5 * (x - cartan_theta(x)));
  }
  const std::vector<CMatrix> k0 = independent_real(kparts, tol);
  const std::vector<CMatrix> p0 = independent_real(pparts, tol);
  rep.dim_k = static_cast<int>(k0.size());
  rep.dim_p = static_cast<int>(p0.size());

  // Trace form on k0 + p0; values are real on a sigma0-real form.
  std::vector<CMatrix> all = k0;
  all.insert(all.end(), p0.begin(), p0.end());
  const auto n = static_cast<Eigen::Index>(all.size());
  DynRMatrix gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) gram(i, j) = trace_form(all[i], all[j]).real();
  rep.signature = sym_signature(gram, tol);

  // Centralizer of a generic X in p0, restricted to p0.
  const auto np = static_cast<Eigen::Index>(p0.size());
  for (int trial = 0; trial < kRankTrials; ++trial) {
    std::mt19937_64 rng(sample_seed(seed, static_cast<std::uint64_t>(trial)));
    CMatrix x = CMatrix::Zero();
    for (const CMatrix& p : p0) x += (static_cast<double>(rng() >> 11) * 0x1p-53 * 2.0 - 1.0) * p;
    DynRMatrix ad(128, np);
    for (Eigen::Index c = 0; c < np; ++c) ad.col(c) = real_coords(x * p0[c] - p0[c] * x);
    const int rank = np == 0 ? 0 : static_cast<int>(np - nullspace_real(ad, tol).cols());
    rep.rank_trials.push_back(static_cast<int>(np) - rank);
  }
  rep.real_rank_estimate = *std::min_element(rep.rank_trials.begin(), rep.rank_trials.end());
  rep.inconclusive = std::any_of(rep.rank_trials.begin(), rep.rank_trials.end(),
                                 [&](int r) { return r != rep.real_rank_estimate; });
  return rep;
}

}  // namespace kah
