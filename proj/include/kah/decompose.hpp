#pragma once

#include <optional>
#include <string_view>

#include "kah/groups.hpp"
#include "kah/pairs.hpp"

namespace kah {

// R1: (SO(7,C), G2(C)), R1prime: (Spin(7,C), G2(C)), R2: (G2(C), SL(3,C)).
enum class PairType { R1, R1prime, R2 };

std::string_view to_string(PairType p);
std::optional<PairType> parse_pair(std::string_view name);

// Ambient group G_C, compact form G_u and reductive subgroup H_C of a pair.
GroupTag ambient_group(PairType p);
GroupTag compact_group(PairType p);
GroupTag subgroup(PairType p);
OneParamKind slice_kind(PairType p);

// g = k * a_theta * h with k in G_u, a_theta on the slice group, h in H_C.
struct KAHFactors {
  PairType pair = PairType::R2;
  CMatrix k = CMatrix::Identity();
  double theta = 0.0;
  CMatrix h = CMatrix::Identity();
  double residual = 0.0;  // ||g - k a_theta h||_F
};

enum class SphereMode { Imaginary7, Full8 };

struct SphereNormalForm {
  Octonion x_hat;  // real unit vector
  Octonion y_hat;  // real unit vector orthogonal to x_hat
  double theta = 0.0;
};

// Candidates whose residual against an orthonormal set is below this norm are
// skipped during the index-ordered completions.
inline constexpr double kCompletionThreshold = 0.25;

// Writes v = cosh(theta) x_hat + i sinh(theta) y_hat with theta >= 0.
// Throws MembershipError if (v, v) != 1 or v leaves the allowed subspace.
SphereNormalForm sphere_normal_form(const Octonion& v, SphereMode mode,
                                    double tol = kDefaultMembershipTol);

// k in G2 with k e1 = u1, k e2 = u2.
CMatrix g2_frame(const Octonion& u1, const Octonion& u2, double tol = kDefaultMembershipTol);

// A Spin(7) element g with g e0 = a, a a real unit octonion. With p the cube
// root of a in the plane of e0 and Im a, g x = p (x p^2) and g0 x = p x conj(p).
TrialityPair spin7_move(const Octonion& a, double tol = kDefaultMembershipTol);

// The membership preconditions are checked at membership_tol * max(1, max|g_ij|)^2
// since the defining laws are quadratic in g. A reconstruction residual above
// `tol` throws MembershipError.
KAHFactors decompose_r2(const CMatrix& g, double tol = kDefaultResidualTol,
                        double membership_tol = kDefaultMembershipTol);
KAHFactors decompose_r1p(const CMatrix& g, double tol = kDefaultResidualTol,
                         double membership_tol = kDefaultMembershipTol);
KAHFactors decompose_r1(const CMatrix& g, double tol = kDefaultResidualTol,
                        double membership_tol = kDefaultMembershipTol);
KAHFactors decompose(PairType pair, const CMatrix& g, double tol = kDefaultResidualTol,
                     double membership_tol = kDefaultMembershipTol);

CMatrix reconstruct(const KAHFactors& f);

}  // namespace kah
