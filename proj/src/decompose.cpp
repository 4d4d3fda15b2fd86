#include "kah/decompose.hpp"

#include <algorithm>
#include <cctype>

#include <cmath>
#include <string>
#include <vector>

#include "kah/errors.hpp"

namespace kah {

namespace {

using RVec8 = Eigen::Matrix<double, 8, 1>;

RVec8 real_vec(const Octonion& x) {
  RVec8 v;
  for (int i = 0; i < 8; ++i) v(i) = x.c[i].real();
  return v;
}

RVec8 imag_vec(const Octonion& x) {
  RVec8 v;
  for (int i = 0; i < 8; ++i) v(i) = x.c[i].imag();
  return v;
}

Octonion from_real(const RVec8& v) {
  Octonion x;
  for (int i = 0; i < 8; ++i) x.c[i] = v(i);
  return x;
}

// First standard basis vector e_first..e_7 whose residual against `frame`
// (orthonormal) has norm above kCompletionThreshold, normalized.
RVec8 complete(const std::vector<RVec8>& frame, int first) {
  for (int i = first; i < 8; ++i) {
    RVec8 c = RVec8::Unit(i);
    for (const RVec8& f : frame) c -= f.dot(c) * f;
    const double n = c.norm();
    if (n > kCompletionThreshold) return c / n;
  }
  throw NumericalError("orthonormal completion failed");
}

void require_real_imaginary_unit(const Octonion& u, const char* what, double tol) {
  if (imag_vec(u).cwiseAbs().maxCoeff() > tol) throw MembershipError(std::string(what) + " is not real", imag_vec(u).cwiseAbs().maxCoeff());
  if (std::abs(u.c[0].real()) > tol) throw MembershipError(std::string(what) + " is not imaginary", std::abs(u.c[0].real()));
  const double n = real_vec(u).norm();
  if (std::abs(n - 1.0) > tol) throw MembershipError(std::string(what) + " is not a unit vector", std::abs(n - 1.0));
}

double frob(const CMatrix& m) { return m.norm(); }

}  // namespace

std::string_view to_string(PairType p) {
  switch (p) {
    case PairType::R1: return "r1";
    case PairType::R1prime: return "r1p";
    case PairType::R2: return "r2";
  }
  return "?";
}

std::optional<PairType> parse_pair(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (PairType p : {PairType::R1, PairType::R1prime, PairType::R2})
    if (to_string(p) == lower) return p;
  return std::nullopt;
}

GroupTag ambient_group(PairType p) {
  switch (p) {
    case PairType::R1: return GroupTag::SO7C;
    case PairType::R1prime: return GroupTag::Spin7C;
    case PairType::R2: return GroupTag::G2C;
  }
  return GroupTag::G2C;
}

GroupTag compact_group(PairType p) {
  switch (p) {
    case PairType::R1: return GroupTag::SO7;
    case PairType::R1prime: return GroupTag::Spin7;
    case PairType::R2: return GroupTag::G2;
  }
  return GroupTag::G2;
}

GroupTag subgroup(PairType p) { return p == PairType::R2 ? GroupTag::SL3C : GroupTag::G2C; }

OneParamKind slice_kind(PairType p) {
  switch (p) {
    case PairType::R1: return OneParamKind::A0;
    case PairType::R1prime: return OneParamKind::A0tilde;
    case PairType::R2: return OneParamKind::A1;
  }
  return OneParamKind::A1;
}

SphereNormalForm sphere_normal_form(const Octonion& v, SphereMode mode, double tol) {
  const double form_dev = std::abs(bilinear_form(v, v) - cplx{1.0});
  if (form_dev > tol * std::max(1.0, norm2(v) * norm2(v)))
    throw MembershipError("sphere_normal_form: (v, v) != 1", form_dev);
  RVec8 x = real_vec(v);
  RVec8 y = imag_vec(v);
  const int first = mode == SphereMode::Imaginary7 ? 1 : 0;
  if (mode == SphereMode::Imaginary7) {
    const double dev = std::max(std::abs(x(0)), std::abs(y(0)));
    if (dev > tol * std::max(1.0, norm2(v)))
      throw MembershipError("sphere_normal_form: v is not imaginary", dev);
    x(0) = 0.0;
    y(0) = 0.0;
  }

  SphereNormalForm out;
  const double ny = y.norm();
  out.theta = std::asinh(ny);
  const RVec8 xh = x / x.norm();
  RVec8 yh;
  if (ny > tol) {
    // Remove the O(tol) component along x_hat left over from (x, y) ~ 0.
    yh = y - xh.dot(y) * xh;
    yh /= yh.norm();
  } else {
    yh = complete({xh}, first);
  }
  out.x_hat = from_real(xh);
  out.y_hat = from_real(yh);
  return out;
}

CMatrix g2_frame(const Octonion& u1, const Octonion& u2, double tol) {
  require_real_imaginary_unit(u1, "u1", tol);
  require_real_imaginary_unit(u2, "u2", tol);
  const double dot = real_vec(u1).dot(real_vec(u2));
  if (std::abs(dot) > tol) throw MembershipError("g2_frame: u1, u2 not orthogonal", std::abs(dot));

  std::array<Octonion, 8> u;
  u[0] = Octonion::unit(0);
  u[1] = u1;
  u[2] = u2;
  u[3] = u1 * u2;
  u[4] = from_real(complete({real_vec(u[1]), real_vec(u[2]), real_vec(u[3])}, 1));
  u[5] = u[1] * u[4];
  u[6] = u[4] * u[2];
  u[7] = u[1] * u[6];
  CMatrix k;
  for (int i = 0; i < 8; ++i) k.col(i) = to_vector(u[i]).real().cast<cplx>();
  return k;
}

TrialityPair spin7_move(const Octonion& a, double tol) {
  if (imag_vec(a).cwiseAbs().maxCoeff() > tol)
    throw MembershipError("spin7_move: a is not real", imag_vec(a).cwiseAbs().maxCoeff());
  if (std::abs(real_vec(a).norm() - 1.0) > tol)
    throw MembershipError("spin7_move: a is not a unit vector", std::abs(real_vec(a).norm() - 1.0));

  // a = cos(phi) + sin(phi) u with u a unit imaginary octonion. With p = a^{1/3}
  // along u, x -> p (x p^2) lies in Spin(7) and its companion is x -> p x conj(p).
  RVec8 im = real_vec(a);
  im(0) = 0.0;
  const double s = im.norm();
  const double phi = std::atan2(s, a.c[0].real());
  const RVec8 u = s > tol ? RVec8(im / s) : RVec8(RVec8::Unit(1));
  Octonion p = from_real(std::sin(phi / 3.0) * u);
  p.c[0] = std::cos(phi / 3.0);
  Octonion p2 = from_real(std::sin(2.0 * phi / 3.0) * u);
  p2.c[0] = std::cos(2.0 * phi / 3.0);

  TrialityPair out;
  out.g = left_mul_matrix(p) * right_mul_matrix(p2);
  out.g0 = left_mul_matrix(p) * right_mul_matrix(oct_conj(p));
  out.residual = triality_residual(out.g, out.g0);
  if (out.residual > tol) throw MembershipError("spin7_move: triality law fails", out.residual);
  return out;
}

namespace {

double entry_scale(const CMatrix& g) { return std::max(1.0, g.cwiseAbs().maxCoeff()); }

void require_member(const CMatrix& g, GroupTag group, double tol, const char* what) {
  const MembershipReport r = classify(g, tol);
  const double scale = entry_scale(g);
  const double res = membership_residual(r, group);
  if (res > tol * scale * scale)
    throw MembershipError(std::string(what) + ": input is not in " + std::string(to_string(group)), res);
}

void finish(KAHFactors& f, const CMatrix& g, double tol) {
  f.residual = frob(g - reconstruct(f));
  if (f.residual > tol)
    throw MembershipError("decompose: reconstruction residual exceeds tolerance", f.residual);
}

}  // namespace

KAHFactors decompose_r2(const CMatrix& g, double tol, double membership_tol) {
  require_member(g, GroupTag::G2C, membership_tol, "decompose_r2");
  KAHFactors f;
  f.pair = PairType::R2;
  const SphereNormalForm nf =
      sphere_normal_form(to_octonion(g.col(1)), SphereMode::Imaginary7, membership_tol * entry_scale(g));
  f.theta = nf.theta;
  f.k = g2_frame(nf.x_hat, nf.y_hat);
  f.h = one_param(OneParamKind::A1, -f.theta).matrix * f.k.transpose() * g;
  finish(f, g, tol);
  return f;
}

KAHFactors decompose_r1p(const CMatrix& g, double tol, double membership_tol) {
  require_member(g, GroupTag::Spin7C, membership_tol, "decompose_r1p");
  KAHFactors f;
  f.pair = PairType::R1prime;
  const SphereNormalForm nf =
      sphere_normal_form(to_octonion(g.col(0)), SphereMode::Full8, membership_tol * entry_scale(g));
  f.theta = nf.theta;
  const CMatrix k1 = spin7_move(nf.x_hat).g;
  // k1 is real orthogonal, so k1^{-1} y_hat is a real unit vector orthogonal to e0.
  Octonion w = to_octonion(k1.transpose() * to_vector(nf.y_hat));
  w.c[0] = 0.0;
  const Octonion w2 = from_real(complete({real_vec(w)}, 1));
  const CMatrix k2 = g2_frame(w, w2);
  f.k = k1 * k2;
  f.h = one_param(OneParamKind::A0tilde, -f.theta).matrix * f.k.transpose() * g;
  finish(f, g, tol);
  return f;
}

KAHFactors decompose_r1(const CMatrix& g, double tol, double membership_tol) {
  require_member(g, GroupTag::SO7C, membership_tol, "decompose_r1");
  const double scale = entry_scale(g);
  const CMatrix lifted = lift(g, membership_tol * scale * scale);
  // The lift can have larger entries than g; the final residual is checked against g.
  const KAHFactors up = decompose_r1p(lifted, tol * entry_scale(lifted), membership_tol);
  KAHFactors f;
  f.pair = PairType::R1;
  f.k = compute_companion(up.k).g0;
  f.theta = 2.0 * up.theta / 3.0;
  f.h = up.h;
  finish(f, g, tol);
  return f;
}

KAHFactors decompose(PairType pair, const CMatrix& g, double tol, double membership_tol) {
  switch (pair) {
    case PairType::R1: return decompose_r1(g, tol, membership_tol);
    case PairType::R1prime: return decompose_r1p(g, tol, membership_tol);
    case PairType::R2: return decompose_r2(g, tol, membership_tol);
  }
  throw std::invalid_argument("unknown pair");
}

CMatrix reconstruct(const KAHFactors& f) {
  return f.k * one_param(slice_kind(f.pair), f.theta).matrix * f.h;
}

}  // namespace kah
