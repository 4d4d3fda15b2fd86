#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "kah/linalg.hpp"

namespace kah {

enum class GroupTag { SO8C, SO7C, Spin7C, G2C, SL3C, SO8, SO7, Spin7, G2, SU3 };

std::optional<GroupTag> parse_group_tag(std::string_view name);
std::string_view to_string(GroupTag tag);
bool is_compact(GroupTag tag);

// Flags and residuals for every group realized inside SO(8,C).
// Residuals are max-abs entry deviations.
struct MembershipReport {
  double tol = kDefaultMembershipTol;

  bool orthogonal = false;
  bool special = false;
  bool fixes_e0 = false;
  bool fixes_e1 = false;
  bool is_automorphism = false;
  bool has_triality_companion = false;
  bool is_real = false;

  double orthogonal_residual = 0.0;
  double special_residual = 0.0;
  double fixes_e0_residual = 0.0;
  double fixes_e1_residual = 0.0;
  double automorphism_residual = 0.0;
  double companion_residual = 0.0;
  double real_residual = 0.0;
};

MembershipReport classify(const CMatrix& g, double tol = kDefaultMembershipTol);

bool is_member(const MembershipReport& r, GroupTag group);
// Largest residual among the laws that define `group`.
double membership_residual(const MembershipReport& r, GroupTag group);

// Max over all 64 ordered basis pairs of |(g e_i)(g e_j) - g(e_i e_j)|.
double automorphism_residual(const CMatrix& g);

CMatrix cartan_theta(const CMatrix& g);

// g acts on the spinor slot, g0 on the vector slot: (g0 x)(g y) = g(xy).
struct TrialityPair {
  CMatrix g;
  CMatrix g0;
  double residual = 0.0;  // law residual over all 64 basis pairs
};

// Max over basis pairs of |(g0 e_i)(g e_j) - g(e_i e_j)|.
double triality_residual(const CMatrix& g, const CMatrix& g0);

// Candidate g0 x = (g x) * conj(g e0) / (g e0, g e0) with its law residual.
// Never throws.
TrialityPair compute_companion(const CMatrix& g);

// Throws MembershipError if g is not orthogonal or the companion law fails.
TrialityPair triality_companion(const CMatrix& g, double tol = kDefaultMembershipTol);

// The double cover Spin(7,C) -> SO(7,C).
CMatrix covering_map(const CMatrix& g, double tol = kDefaultMembershipTol);

// 512 x 64 homogeneous system whose nullspace holds vec(g) (column-major)
// for every g with (g0 x)(g y) = g(xy).
DynCMatrix lift_system(const CMatrix& g0);

// Nullspace of lift_system(g0); its column count is the lift nullity.
DynCMatrix lift_nullspace(const CMatrix& g0, double tol = kDefaultMembershipTol);

// Preimage of g0 under the covering map, normalized to (g e0, g e0) = 1 and
// signed so that the first entry of g e0 with modulus > tol has argument in
// (-pi/2, pi/2]. Throws NumericalError on nullity != 1 or failed normalization,
// MembershipError if g0 is not in SO(7,C).
CMatrix lift(const CMatrix& g0, double tol = kDefaultMembershipTol);

inline constexpr double kMaxRandomScale = 3.0;

// exp of a random combination of the group's Lie algebra basis, each element
// scaled to unit Frobenius norm first. Coefficients
// are i.i.d. uniform in [-scale, scale]; complex groups draw real and
// imaginary parts separately. PRNG: std::mt19937_64 seeded with `seed`,
// mapped to [0,1) via the top 53 bits of each draw.
CMatrix random_element(GroupTag group, std::uint64_t seed, double scale);

// Deterministic per-sample seed: splitmix64(seed ^ splitmix64(index)).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace kah
