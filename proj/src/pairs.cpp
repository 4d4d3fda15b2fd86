#include "kah/pairs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "kah/errors.hpp"

namespace kah {

namespace {

constexpr cplx kI{0.0, 1.0};

void put_block(CMatrix& m, int at, const Eigen::Matrix2cd& b) { m.block<2, 2>(at, at) = b; }

// 4x4 generator delta_(x,y) placed at rows/cols [at, at+4).
void put_delta(CMatrix& m, int at, double x, double y) {
  m(at + 0, at + 3) = -kI * x;
  m(at + 3, at + 0) = kI * x;
  m(at + 1, at + 2) = -kI * y;
  m(at + 2, at + 1) = kI * y;
}

// exp(delta_(x,y)) in closed form, placed at [at, at+4).
void put_exp_delta(CMatrix& m, int at, double x, double y) {
  m(at + 0, at + 0) = std::cosh(x);
  m(at + 3, at + 3) = std::cosh(x);
  m(at + 0, at + 3) = -kI * std::sinh(x);
  m(at + 3, at + 0) = kI * std::sinh(x);
  m(at + 1, at + 1) = std::cosh(y);
  m(at + 2, at + 2) = std::cosh(y);
  m(at + 1, at + 2) = -kI * std::sinh(y);
  m(at + 2, at + 1) = kI * std::sinh(y);
}

CMatrix x_(int i, int j) { return elementary_antisym(i, j); }

Eigen::VectorXcd vec(const CMatrix& m) { return Eigen::Map<const Eigen::VectorXcd>(m.data(), 64); }

CMatrix unvec(const Eigen::VectorXcd& v) {
  CMatrix m;
  for (int j = 0; j < 8; ++j)
    for (int r = 0; r < 8; ++r) m(r, j) = v(8 * j + r);
  return m;
}

SubalgebraBasis make_sl3() {
  return {AlgebraTag::sl3C,
          {-x_(2, 3) + x_(4, 5), -x_(4, 5) + x_(6, 7), x_(2, 4) + x_(3, 5), -x_(2, 5) + x_(3, 4),
           x_(2, 6) + x_(3, 7), -x_(2, 7) + x_(3, 6), x_(4, 6) + x_(5, 7), -x_(4, 7) + x_(5, 6)},
          SpanField::Complex};
}

SubalgebraBasis make_q() {
  return {AlgebraTag::qG2,
          {2.0 * x_(1, 2) - x_(4, 7) - x_(5, 6), 2.0 * x_(1, 3) - x_(4, 6) + x_(5, 7),
           2.0 * x_(1, 4) + x_(2, 7) + x_(3, 6), 2.0 * x_(1, 5) + x_(2, 6) - x_(3, 7),
           2.0 * x_(1, 6) - x_(2, 5) - x_(3, 4), 2.0 * x_(1, 7) - x_(2, 4) + x_(3, 5)},
          SpanField::Complex};
}

SubalgebraBasis make_g2() {
  SubalgebraBasis b{AlgebraTag::g2C, make_sl3().elements, SpanField::Complex};
  const auto q = make_q();
  b.elements.insert(b.elements.end(), q.elements.begin(), q.elements.end());
  return b;
}

SubalgebraBasis make_so8() {
  SubalgebraBasis b{AlgebraTag::so8C, {}, SpanField::Complex};
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) b.elements.push_back(x_(i, j));
  return b;
}

// Orthonormal real basis of the column span of the (real) 64 x n matrix.
std::vector<CMatrix> orthonormal_columns(const DynRMatrix& cols) {
  Eigen::JacobiSVD<DynRMatrix> svd(cols, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  std::vector<CMatrix> out;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) <= kDefaultMembershipTol * sv(0)) break;
    Eigen::VectorXcd v = svd.matrixU().col(k).cast<cplx>();
    out.push_back(unvec(v));
  }
  return out;
}

// so(7,C): antisymmetric X with X e0 = 0.
SubalgebraBasis make_so7() {
  DynRMatrix a = DynRMatrix::Zero(64 + 8, 64);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      a(8 * c + r, 8 * c + r) += 1.0;  // X(r,c)
      a(8 * c + r, 8 * r + c) += 1.0;  // + X(c,r)
    }
  for (int r = 0; r < 8; ++r) a(64 + r, r) = 1.0;  // X(r,0)
  const DynRMatrix ns = nullspace_real(a);
  return {AlgebraTag::so7C, orthonormal_columns(ns), SpanField::Complex};
}

// Linearized triality: unknowns (X, X0), 128 real coordinates.
SubalgebraBasis make_spin7() {
  const MultTable& t = mult_table();
  DynRMatrix a = DynRMatrix::Zero(64 + 64 + 8 + 512, 128);
  Eigen::Index row = 0;
  for (int off : {0, 64}) {
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) {
        a(row, off + 8 * c + r) += 1.0;
        a(row, off + 8 * r + c) += 1.0;
        ++row;
      }
  }
  for (int r = 0; r < 8; ++r) a(row++, 64 + r) = 1.0;  // X0 e0 = 0
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      // (X0 e_i) e_j + e_i (X e_j) - X(e_i e_j) = 0
      const CMatrix rj = right_mul_matrix(Octonion::unit(j));
      const CMatrix li = left_mul_matrix(Octonion::unit(i));
      const TableEntry& e = t(i, j);
      for (int r = 0; r < 8; ++r) {
        for (int s = 0; s < 8; ++s) {
          a(row + r, 64 + 8 * i + s) += rj(r, s).real();
          a(row + r, 8 * j + s) += li(r, s).real();
        }
        a(row + r, 8 * e.index + r) -= static_cast<double>(e.sign);
      }
      row += 8;
    }
  }
  const DynRMatrix ns = nullspace_real(a);
  return {AlgebraTag::spin7C, orthonormal_columns(ns.topRows(64)), SpanField::Complex};
}

}  // namespace

Eigen::Matrix2cd hyperbolic_block(double t) {
  Eigen::Matrix2cd d;
  d << std::cosh(t), -kI * std::sinh(t), kI * std::sinh(t), std::cosh(t);
  return d;
}

Eigen::Matrix2cd hyperbolic_generator(double t) {
  Eigen::Matrix2cd d;
  d << 0.0, -kI * t, kI * t, 0.0;
  return d;
}

OneParamElement one_param(OneParamKind kind, double theta) {
  OneParamElement e;
  e.kind = kind;
  e.theta = theta;
  e.matrix = CMatrix::Zero();
  e.algebra_matrix = CMatrix::Zero();
  switch (kind) {
    case OneParamKind::A1:
      put_delta(e.algebra_matrix, 0, 0.0, theta);
      put_delta(e.algebra_matrix, 4, -theta / 2, -theta / 2);
      put_exp_delta(e.matrix, 0, 0.0, theta);
      put_exp_delta(e.matrix, 4, -theta / 2, -theta / 2);
      break;
    case OneParamKind::A0tilde:
      put_block(e.matrix, 0, hyperbolic_block(theta));
      put_block(e.algebra_matrix, 0, hyperbolic_generator(theta));
      for (int at : {2, 4, 6}) {
        put_block(e.matrix, at, hyperbolic_block(-theta / 3));
        put_block(e.algebra_matrix, at, hyperbolic_generator(-theta / 3));
      }
      break;
    case OneParamKind::A0:
      e.matrix(0, 0) = 1.0;
      e.matrix(1, 1) = 1.0;
      for (int at : {2, 4, 6}) {
        put_block(e.matrix, at, hyperbolic_block(theta));
        put_block(e.algebra_matrix, at, hyperbolic_generator(theta));
      }
      break;
  }
  return e;
}

std::string_view to_string(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::sl3C: return "sl3c";
    case AlgebraTag::qG2: return "qg2";
    case AlgebraTag::g2C: return "g2c";
    case AlgebraTag::spin7C: return "spin7c";
    case AlgebraTag::so7C: return "so7c";
    case AlgebraTag::so8C: return "so8c";
    case AlgebraTag::su3: return "su3";
    case AlgebraTag::g2compact: return "g2";
    case AlgebraTag::spin7compact: return "spin7";
    case AlgebraTag::so7compact: return "so7";
    case AlgebraTag::so8compact: return "so8";
  }
  return "?";
}

std::optional<AlgebraTag> parse_algebra_tag(std::string_view name) {
  for (AlgebraTag t : {AlgebraTag::sl3C, AlgebraTag::qG2, AlgebraTag::g2C, AlgebraTag::spin7C,
                       AlgebraTag::so7C, AlgebraTag::so8C, AlgebraTag::su3, AlgebraTag::g2compact,
                       AlgebraTag::spin7compact, AlgebraTag::so7compact, AlgebraTag::so8compact})
    if (to_string(t) == name) return t;
  return std::nullopt;
}

const SubalgebraBasis& basis(AlgebraTag tag) {
  // Function-local statics give one-time thread-safe initialization.
  switch (tag) {
    case AlgebraTag::sl3C: {
      static const SubalgebraBasis b = make_sl3();
      return b;
    }
    case AlgebraTag::qG2: {
      static const SubalgebraBasis b = make_q();
      return b;
    }
    case AlgebraTag::g2C: {
      static const SubalgebraBasis b = make_g2();
      return b;
    }
    case AlgebraTag::spin7C: {
      static const SubalgebraBasis b = make_spin7();
      return b;
    }
    case AlgebraTag::so7C: {
      static const SubalgebraBasis b = make_so7();
      return b;
    }
    case AlgebraTag::so8C: {
      static const SubalgebraBasis b = make_so8();
      return b;
    }
    case AlgebraTag::su3: {
      static const SubalgebraBasis b = compact_form(basis(AlgebraTag::sl3C), tag);
      return b;
    }
    case AlgebraTag::g2compact: {
      static const SubalgebraBasis b = compact_form(basis(AlgebraTag::g2C), tag);
      return b;
    }
    case AlgebraTag::spin7compact: {
      static const SubalgebraBasis b = compact_form(basis(AlgebraTag::spin7C), tag);
      return b;
    }
    case AlgebraTag::so7compact: {
      static const SubalgebraBasis b = compact_form(basis(AlgebraTag::so7C), tag);
      return b;
    }
    case AlgebraTag::so8compact: {
      static const SubalgebraBasis b = compact_form(basis(AlgebraTag::so8C), tag);
      return b;
    }
  }
  throw std::invalid_argument("unknown algebra tag");
}

cplx trace_form(const CMatrix& x, const CMatrix& y) { return (x * y).trace(); }

DynCMatrix trace_gram(const SubalgebraBasis& b) {
  const auto n = static_cast<Eigen::Index>(b.size());
  DynCMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = trace_form(b.elements[i], b.elements[j]);
  return g;
}

namespace {

DynCMatrix basis_matrix(const SubalgebraBasis& b) {
  DynCMatrix m(64, static_cast<Eigen::Index>(b.size()));
  for (std::size_t k = 0; k < b.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = vec(b.elements[k]);
  return m;
}

}  // namespace

DynCVector coordinates(const SubalgebraBasis& b, const CMatrix& x, double* residual) {
  const DynCMatrix m = basis_matrix(b);
  const Eigen::VectorXcd v = vec(x);
  DynCVector c = m.colPivHouseholderQr().solve(v);
  if (residual) *residual = (m * c - v).cwiseAbs().maxCoeff();
  return c;
}

DynCMatrix killing_gram(const SubalgebraBasis& b) {
  const auto n = static_cast<Eigen::Index>(b.size());
  const DynCMatrix m = basis_matrix(b);
  const auto qr = m.colPivHouseholderQr();
  std::vector<DynCMatrix> ad(b.size(), DynCMatrix(n, n));
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index c = 0; c < n; ++c) {
      const CMatrix br = b.elements[a] * b.elements[c] - b.elements[c] * b.elements[a];
      ad[a].col(c) = qr.solve(vec(br));
    }
  DynCMatrix k(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) k(i, j) = (ad[i] * ad[j]).trace();
  return k;
}

SubalgebraBasis orthogonal_complement(const SubalgebraBasis& ambient, const SubalgebraBasis& sub,
                                      double tol) {
  const double scale = std::max(1.0, basis_matrix(sub).cwiseAbs().maxCoeff());
  for (const CMatrix& s : sub.elements) {
    double res = 0.0;
    coordinates(ambient, s, &res);
    if (res > tol * scale * 1e3)
      throw NumericalError("orthogonal_complement: sub does not lie in span(ambient)");
  }
  const auto na = static_cast<Eigen::Index>(ambient.size());
  const auto ns = static_cast<Eigen::Index>(sub.size());
  DynCMatrix gram(std::max<Eigen::Index>(ns, 1), na);
  gram.setZero();
  for (Eigen::Index l = 0; l < ns; ++l)
    for (Eigen::Index k = 0; k < na; ++k) gram(l, k) = trace_form(ambient.elements[k], sub.elements[l]);

  const DynCMatrix null = ns == 0 ? DynCMatrix(DynCMatrix::Identity(na, na)) : nullspace(gram, tol);
  const int sub_rank = span_rank(sub.elements, SpanField::Complex, tol);
  if (null.cols() != na - sub_rank)
    throw NumericalError("orthogonal_complement: dimension " + std::to_string(null.cols()) +
                         " != " + std::to_string(na - sub_rank));
  SubalgebraBasis out{ambient.tag, {}, ambient.field};
  for (Eigen::Index c = 0; c < null.cols(); ++c) {
    CMatrix x = CMatrix::Zero();
    for (Eigen::Index k = 0; k < na; ++k) x += null(k, c) * ambient.elements[k];
    out.elements.push_back(x);
  }
  return out;
}

int span_rank(const std::vector<CMatrix>& elems, SpanField field, double tol) {
  if (elems.empty()) return 0;
  const auto n = static_cast<Eigen::Index>(elems.size());
  if (field == SpanField::Complex) {
    DynCMatrix m(64, n);
    for (Eigen::Index k = 0; k < n; ++k) m.col(k) = vec(elems[k]);
    return numerical_rank(m, tol);
  }
  DynRMatrix m(128, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::VectorXcd v = vec(elems[k]);
    m.col(k).head(64) = v.real();
    m.col(k).tail(64) = v.imag();
  }
  return numerical_rank_real(m, tol);
}

SubalgebraBasis compact_form(const SubalgebraBasis& complex_basis, AlgebraTag compact_tag,
                             double tol) {
  SubalgebraBasis out{compact_tag, {}, SpanField::Real};
  auto try_add = [&](const CMatrix& c) {
    const double scale = c.cwiseAbs().maxCoeff();
    if (scale <= tol) return;
    if ((c + c.adjoint()).cwiseAbs().maxCoeff() > tol * scale) return;
    out.elements.push_back(c);
    if (span_rank(out.elements, SpanField::Real, tol) < static_cast<int>(out.elements.size()))
      out.elements.pop_back();
  };
  for (const CMatrix& b : complex_basis.elements) {
    const CMatrix conj = b.conjugate();
    try_add(0.5 * (b + conj));
    try_add(kI * 0.5 * (b - conj));
  }
  return out;
}

namespace {

// max over basis pairs |A(e_i) e_j + e_i B(e_j) - C(e_i e_j)| with A, B, C linear maps.
double bilinear_law_residual(const CMatrix& left_map, const CMatrix& right_map, const CMatrix& out_map) {
  const MultTable& t = mult_table();
  double res = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const TableEntry& e = t(i, j);
      Octonion d = to_octonion(left_map.col(i)) * Octonion::unit(j) +
                   Octonion::unit(i) * to_octonion(right_map.col(j));
      d -= static_cast<double>(e.sign) * to_octonion(out_map.col(e.index));
      res = std::max(res, max_abs(d));
    }
  return res;
}

}  // namespace

double derivation_residual(const CMatrix& x) { return bilinear_law_residual(x, x, x); }

double spin7_algebra_residual(const CMatrix& x) {
  // Setting b = e0 forces X0 a = X a - a (X e0).
  const CMatrix x0 = x - right_mul_matrix(to_octonion(x.col(0)));
  return std::max({so8_algebra_residual(x), so7_algebra_residual(x0),
                   bilinear_law_residual(x0, x, x)});
}

double so8_algebra_residual(const CMatrix& x) { return (x + x.transpose()).cwiseAbs().maxCoeff(); }

double so7_algebra_residual(const CMatrix& x) {
  return std::max(so8_algebra_residual(x), x.col(0).cwiseAbs().maxCoeff());
}

double algebra_residual(AlgebraTag tag, const CMatrix& x) {
  switch (tag) {
    case AlgebraTag::sl3C:
    case AlgebraTag::su3:
      return std::max(derivation_residual(x), x.col(1).cwiseAbs().maxCoeff());
    case AlgebraTag::qG2:
    case AlgebraTag::g2C:
    case AlgebraTag::g2compact:
      return derivation_residual(x);
    case AlgebraTag::spin7C:
    case AlgebraTag::spin7compact:
      return spin7_algebra_residual(x);
    case AlgebraTag::so7C:
    case AlgebraTag::so7compact:
      return so7_algebra_residual(x);
    case AlgebraTag::so8C:
    case AlgebraTag::so8compact:
      return so8_algebra_residual(x);
  }
  return 0.0;
}

}  // namespace kah
