#include "kah/groups.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "kah/errors.hpp"
#include "kah/pairs.hpp"

namespace kah {

namespace {

struct TagName {
  GroupTag tag;
  std::string_view name;
};

constexpr std::array<TagName, 10> kTagNames{{{GroupTag::SO8C, "so8c"},
                                             {GroupTag::SO7C, "so7c"},
                                             {GroupTag::Spin7C, "spin7c"},
                                             {GroupTag::G2C, "g2c"},
                                             {GroupTag::SL3C, "sl3c"},
                                             {GroupTag::SO8, "so8"},
                                             {GroupTag::SO7, "so7"},
                                             {GroupTag::Spin7, "spin7"},
                                             {GroupTag::G2, "g2"},
                                             {GroupTag::SU3, "su3"}}};

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double column_residual(const CMatrix& g, int j) {
  CVector8 d = g.col(j);
  d(j) -= 1.0;
  return d.cwiseAbs().maxCoeff();
}

}  // namespace

std::optional<GroupTag> parse_group_tag(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& t : kTagNames)
    if (t.name == lower) return t.tag;
  return std::nullopt;
}

std::string_view to_string(GroupTag tag) {
  for (const auto& t : kTagNames)
    if (t.tag == tag) return t.name;
  return "?";
}

bool is_compact(GroupTag tag) {
  switch (tag) {
    case GroupTag::SO8:
    case GroupTag::SO7:
    case GroupTag::Spin7:
    case GroupTag::G2:
    case GroupTag::SU3:
      return true;
    default:
      return false;
  }
}

double automorphism_residual(const CMatrix& g) { return triality_residual(g, g); }

double triality_residual(const CMatrix& g, const CMatrix& g0) {
  const MultTable& t = mult_table();
  std::array<Octonion, 8> gcol, g0col;
  for (int j = 0; j < 8; ++j) {
    gcol[j] = to_octonion(g.col(j));
    g0col[j] = to_octonion(g0.col(j));
  }
  double res = 0.0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const TableEntry& e = t(i, j);
      Octonion d = g0col[i] * gcol[j];
      d -= static_cast<double>(e.sign) * gcol[e.index];
      res = std::max(res, kah::max_abs(d));
    }
  }
  return res;
}

TrialityPair compute_companion(const CMatrix& g) {
  const Octonion a = to_octonion(g.col(0));
  const cplx n = bilinear_form(a, a);
  Octonion inv = oct_conj(a);
  if (std::abs(n) > 0.0) inv *= 1.0 / n;
  TrialityPair p;
  p.g = g;
  for (int j = 0; j < 8; ++j) p.g0.col(j) = to_vector(to_octonion(g.col(j)) * inv);
  p.residual = triality_residual(g, p.g0);
  return p;
}

TrialityPair triality_companion(const CMatrix& g, double tol) {
  const double orth = max_abs(g.transpose() * g - CMatrix::Identity());
  if (orth > tol) throw MembershipError("triality_companion: matrix is not orthogonal", orth);
  TrialityPair p = compute_companion(g);
  if (p.residual > tol)
    throw MembershipError("triality_companion: no companion, matrix is not in Spin(7,C)",
                          p.residual);
  return p;
}

CMatrix covering_map(const CMatrix& g, double tol) { return triality_companion(g, tol).g0; }

MembershipReport classify(const CMatrix& g, double tol) {
  MembershipReport r;
  r.tol = tol;
  r.orthogonal_residual = max_abs(g.transpose() * g - CMatrix::Identity());
  r.special_residual = std::abs(g.determinant() - cplx{1.0});
  r.fixes_e0_residual = column_residual(g, 0);
  r.fixes_e1_residual = column_residual(g, 1);
  r.automorphism_residual = automorphism_residual(g);
  const TrialityPair p = compute_companion(g);
  // The companion must itself lie in SO(7,C).
  r.companion_residual = std::max({p.residual,
                                   max_abs(p.g0.transpose() * p.g0 - CMatrix::Identity()),
                                   column_residual(p.g0, 0)});
  r.real_residual = g.imag().cwiseAbs().maxCoeff();

  r.orthogonal = r.orthogonal_residual <= tol;
  r.special = r.special_residual <= tol;
  r.fixes_e0 = r.fixes_e0_residual <= tol;
  r.fixes_e1 = r.fixes_e1_residual <= tol;
  r.is_automorphism = r.automorphism_residual <= tol;
  r.has_triality_companion = r.orthogonal && r.companion_residual <= tol;
  r.is_real = r.real_residual <= tol;
  return r;
}

double membership_residual(const MembershipReport& r, GroupTag group) {
  double res = std::max(r.orthogonal_residual, r.special_residual);
  switch (group) {
    case GroupTag::SO8C:
    case GroupTag::SO8:
      break;
    case GroupTag::SO7C:
    case GroupTag::SO7:
      res = std::max(res, r.fixes_e0_residual);
      break;
    case GroupTag::Spin7C:
    case GroupTag::Spin7:
      res = std::max(res, r.companion_residual);
      break;
    case GroupTag::G2C:
    case GroupTag::G2:
      res = std::max({res, r.fixes_e0_residual, r.automorphism_residual});
      break;
    case GroupTag::SL3C:
    case GroupTag::SU3:
      res = std::max({res, r.fixes_e0_residual, r.automorphism_residual, r.fixes_e1_residual});
      break;
  }
  if (is_compact(group)) res = std::max(res, r.real_residual);
  return res;
}

bool is_member(const MembershipReport& r, GroupTag group) {
  return membership_residual(r, group) <= r.tol;
}

CMatrix cartan_theta(const CMatrix& g) { return g.conjugate(); }

DynCMatrix lift_system(const CMatrix& g0) {
  const MultTable& t = mult_table();
  DynCMatrix a = DynCMatrix::Zero(512, 64);
  for (int i = 0; i < 8; ++i) {
    const CMatrix left = left_mul_matrix(to_octonion(g0.col(i)));
    for (int j = 0; j < 8; ++j) {
      const TableEntry& e = t(i, j);
      const Eigen::Index row = 8 * (8 * i + j);
      a.block(row, 8 * j, 8, 8) += left;
      for (int r = 0; r < 8; ++r) a(row + r, 8 * e.index + r) -= static_cast<double>(e.sign);
    }
  }
  return a;
}

DynCMatrix lift_nullspace(const CMatrix& g0, double tol) { return nullspace(lift_system(g0), tol); }

CMatrix lift(const CMatrix& g0, double tol) {
  const double orth = max_abs(g0.transpose() * g0 - CMatrix::Identity());
  const double fix = column_residual(g0, 0);
  if (std::max(orth, fix) > tol)
    throw MembershipError("lift: input is not in SO(7,C)", std::max(orth, fix));

  const DynCMatrix ns = lift_nullspace(g0, tol);
  if (ns.cols() != 1)
    throw NumericalError("lift: nullspace dimension " + std::to_string(ns.cols()) + " != 1");

  CMatrix g;
  for (int j = 0; j < 8; ++j)
    for (int r = 0; r < 8; ++r) g(r, j) = ns(8 * j + r, 0);

  const Octonion ge0 = to_octonion(g.col(0));
  const cplx n = bilinear_form(ge0, ge0);
  if (std::abs(n) <= tol) throw NumericalError("lift: cannot normalize, (g e0, g e0) ~ 0");
  g /= std::sqrt(n);

  for (int r = 0; r < 8; ++r) {
    const cplx c = g(r, 0);
    if (std::abs(c) <= tol) continue;
    const double arg = std::arg(c);
    if (arg <= -std::numbers::pi / 2 || arg > std::numbers::pi / 2) g = -g;
    break;
  }
  return g;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

AlgebraTag algebra_of(GroupTag tag) {
  switch (tag) {
    case GroupTag::SO8C: return AlgebraTag::so8C;
    case GroupTag::SO7C: return AlgebraTag::so7C;
    case GroupTag::Spin7C: return AlgebraTag::spin7C;
    case GroupTag::G2C: return AlgebraTag::g2C;
    case GroupTag::SL3C: return AlgebraTag::sl3C;
    case GroupTag::SO8: return AlgebraTag::so8compact;
    case GroupTag::SO7: return AlgebraTag::so7compact;
    case GroupTag::Spin7: return AlgebraTag::spin7compact;
    case GroupTag::G2: return AlgebraTag::g2compact;
    case GroupTag::SU3: return AlgebraTag::su3;
  }
  throw std::invalid_argument("unknown group tag");
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

CMatrix random_element(GroupTag group, std::uint64_t seed, double scale) {
  if (!(scale >= 0.0) || scale > kMaxRandomScale)
    throw std::invalid_argument("random_element: scale must lie in [0, 3]");
  const SubalgebraBasis& b = basis(algebra_of(group));
  std::mt19937_64 rng(seed);
  auto uniform = [&] {
    const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
    return scale * (2.0 * u - 1.0);
  };
  CMatrix x = CMatrix::Zero();
  for (const CMatrix& e : b.elements) {
    cplx coeff = uniform();
    if (!is_compact(group)) coeff += cplx{0.0, uniform()};
    x += coeff * (e / e.norm());
  }
  return expm(x);
}

}  // namespace kah
