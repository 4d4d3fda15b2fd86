#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "kah/linalg.hpp"

namespace kah {

// The three abelian slice groups: A1 in G2(C), A0tilde in Spin(7,C), A0 in SO(7,C).
enum class OneParamKind { A1, A0tilde, A0 };

struct OneParamElement {
  OneParamKind kind = OneParamKind::A1;
  double theta = 0.0;
  CMatrix matrix;          // group element, assembled in closed form
  CMatrix algebra_matrix;  // generator, matrix = expm(algebra_matrix)
};

OneParamElement one_param(OneParamKind kind, double theta);

// 2x2 block [[cosh t, -i sinh t], [i sinh t, cosh t]].
Eigen::Matrix2cd hyperbolic_block(double t);
// 2x2 block [[0, -i t], [i t, 0]].
Eigen::Matrix2cd hyperbolic_generator(double t);

enum class AlgebraTag {
  sl3C,
  qG2,
  g2C,
  spin7C,
  so7C,
  so8C,
  su3,
  g2compact,
  spin7compact,
  so7compact,
  so8compact
};
enum class SpanField { Real, Complex };

std::string_view to_string(AlgebraTag tag);
std::optional<AlgebraTag> parse_algebra_tag(std::string_view name);

struct SubalgebraBasis {
  AlgebraTag tag = AlgebraTag::g2C;
  std::vector<CMatrix> elements;
  SpanField field = SpanField::Complex;

  std::size_t size() const { return elements.size(); }
};

// Cached; built on first use and immutable afterwards.
const SubalgebraBasis& basis(AlgebraTag tag);

// tr(XY). On each simple algebra here this is a fixed multiple of the Killing form.
cplx trace_form(const CMatrix& x, const CMatrix& y);

// Gram matrix tr(B_a B_b) and Killing matrix tr(ad B_a ad B_b) from structure constants.
DynCMatrix trace_gram(const SubalgebraBasis& b);
DynCMatrix killing_gram(const SubalgebraBasis& b);

// Coordinates of x in span(b) by least squares, and the fit residual.
DynCVector coordinates(const SubalgebraBasis& b, const CMatrix& x, double* residual = nullptr);

// Basis of {X in span(ambient) : tr(XB) = 0 for all B in sub}. Throws
// NumericalError if the dimension differs from dim(ambient) - dim(sub) or sub
// does not lie in span(ambient).
SubalgebraBasis orthogonal_complement(const SubalgebraBasis& ambient, const SubalgebraBasis& sub,
                                      double tol = kDefaultMembershipTol);

// Real basis of the compact form: for each B take Re B and -Im B, keep a
// maximal real-independent antihermitian subset (index order).
SubalgebraBasis compact_form(const SubalgebraBasis& complex_basis, AlgebraTag compact_tag,
                             double tol = kDefaultMembershipTol);

// Lie algebra laws (max-abs residuals).
double derivation_residual(const CMatrix& x);         // X(ab) = (Xa)b + a(Xb)
double spin7_algebra_residual(const CMatrix& x);      // (X0 a)b + a(Xb) = X(ab)
double so7_algebra_residual(const CMatrix& x);        // X^T = -X, X e0 = 0
double so8_algebra_residual(const CMatrix& x);        // X^T = -X
double algebra_residual(AlgebraTag tag, const CMatrix& x);

// Number of linearly independent elements over the given field.
int span_rank(const std::vector<CMatrix>& elems, SpanField field, double tol = kDefaultMembershipTol);

}  // namespace kah
