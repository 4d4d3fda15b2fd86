#pragma once

#include <Eigen/Dense>
#include <tuple>
#include <vector>

#include "kah/cayley.hpp"

namespace kah {

// Column convention: (g x)_i = sum_j g(i, j) x_j on octonion coefficients.
using CMatrix = Eigen::Matrix<cplx, 8, 8>;
using CVector8 = Eigen::Matrix<cplx, 8, 1>;
using DynCMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using DynCVector = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;
using DynRMatrix = Eigen::MatrixXd;

inline constexpr double kDefaultMembershipTol = 1e-9;
inline constexpr double kDefaultResidualTol = 1e-7;
inline constexpr double kExpmMaxNorm = 50.0;

CVector8 to_vector(const Octonion& x);
Octonion to_octonion(const CVector8& v);

Octonion mat_apply(const CMatrix& g, const Octonion& x);

// Matrix of x -> a*x and x -> x*a.
CMatrix left_mul_matrix(const Octonion& a);
CMatrix right_mul_matrix(const Octonion& a);

// E_ij - E_ji.
CMatrix elementary_antisym(int i, int j);

// diag(1,-1,1,-1,1,-1,1,-1)
const CMatrix& i_plus_minus();

bool all_finite(const CMatrix& g);

// Scaling and squaring with a degree-13 Pade core. Throws std::domain_error
// when ||X||_F exceeds kExpmMaxNorm or X has non-finite entries.
CMatrix expm(const CMatrix& x);

// Orthonormal basis of the right nullspace of A. Singular values at or below
// rel_tol * sigma_max are treated as zero. Each basis vector is a column.
DynCMatrix nullspace(const DynCMatrix& a, double rel_tol = kDefaultMembershipTol);
DynRMatrix nullspace_real(const DynRMatrix& a, double rel_tol = kDefaultMembershipTol);

// Numerical rank with the same relative threshold.
int numerical_rank(const DynCMatrix& a, double rel_tol = kDefaultMembershipTol);
int numerical_rank_real(const DynRMatrix& a, double rel_tol = kDefaultMembershipTol);

struct Signature {
  int pos = 0;
  int neg = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Eigenvalue sign counts of a real symmetric matrix; |lambda| <= tol * max|lambda|
// counts as zero. Throws std::invalid_argument if M is not symmetric within tol.
Signature sym_signature(const DynRMatrix& m, double tol = kDefaultMembershipTol);

}  // namespace kah
