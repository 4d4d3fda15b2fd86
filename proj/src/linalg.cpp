#include "kah/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kah {

CVector8 to_vector(const Octonion& x) {
  CVector8 v;
  for (int i = 0; i < 8; ++i) v(i) = x.c[i];
  return v;
}

Octonion to_octonion(const CVector8& v) {
  Octonion x;
  for (int i = 0; i < 8; ++i) x.c[i] = v(i);
  return x;
}

Octonion mat_apply(const CMatrix& g, const Octonion& x) { return to_octonion(g * to_vector(x)); }

CMatrix left_mul_matrix(const Octonion& a) {
  CMatrix m;
  for (int j = 0; j < 8; ++j) m.col(j) = to_vector(a * Octonion::unit(j));
  return m;
}

CMatrix right_mul_matrix(const Octonion& a) {
  CMatrix m;
  for (int j = 0; j < 8; ++j) m.col(j) = to_vector(Octonion::unit(j) * a);
  return m;
}

CMatrix elementary_antisym(int i, int j) {
  CMatrix m = CMatrix::Zero();
  m(i, j) = 1.0;
  m(j, i) = -1.0;
  return m;
}

const CMatrix& i_plus_minus() {
  static const CMatrix m = [] {
    CMatrix d = CMatrix::Zero();
    for (int i = 0; i < 8; ++i) d(i, i) = (i % 2 == 0) ? 1.0 : -1.0;
    return d;
  }();
  return m;
}

bool all_finite(const CMatrix& g) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!std::isfinite(g(i, j).real()) || !std::isfinite(g(i, j).imag())) return false;
  return true;
}

namespace {

// Pade(13) coefficients and the 1-norm threshold theta_13 from Higham (2005).
constexpr std::array<double, 14> kPade13{64764752532480000.0,
                                         32382376266240000.0,
                                         7771770303897600.0,
                                         1187353796428800.0,
                                         129060195264000.0,
                                         10559470521600.0,
                                         670442572800.0,
                                         33522128640.0,
                                         1323241920.0,
                                         40840800.0,
                                         960960.0,
                                         16380.0,
                                         182.0,
                                         1.0};
constexpr double kTheta13 = 5.371920351148152;

double one_norm(const CMatrix& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

}  // namespace

CMatrix expm(const CMatrix& x) {
  if (!all_finite(x)) throw std::domain_error("expm: non-finite input");
  if (x.norm() > kExpmMaxNorm) throw std::domain_error("expm: ||X||_F exceeds limit");
  if (x.isZero(0.0)) return CMatrix::Identity();

  const double n1 = one_norm(x);
  int s = 0;
  if (n1 > kTheta13) s = std::max(0, static_cast<int>(std::ceil(std::log2(n1 / kTheta13))));
  const CMatrix a = x / std::ldexp(1.0, s);

  const CMatrix id = CMatrix::Identity();
  const CMatrix a2 = a * a;
  const CMatrix a4 = a2 * a2;
  const CMatrix a6 = a4 * a2;
  const auto& b = kPade13;

  const CMatrix u_inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
  const CMatrix u = a * (a6 * u_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  const CMatrix v_inner = b[12] * a6 + b[10] * a4 + b[8] * a2;
  const CMatrix v = a6 * v_inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

  CMatrix r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < s; ++k) r = r * r;
  return r;
}

DynCMatrix nullspace(const DynCMatrix& a, double rel_tol) {
  const auto n = a.cols();
  Eigen::JacobiSVD<DynCMatrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * smax) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

DynRMatrix nullspace_real(const DynRMatrix& a, double rel_tol) {
  const auto n = a.cols();
  Eigen::JacobiSVD<DynRMatrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * smax) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

int numerical_rank(const DynCMatrix& a, double rel_tol) {
  if (a.size() == 0) return 0;
  return static_cast<int>(a.cols() - nullspace(a, rel_tol).cols());
}

int numerical_rank_real(const DynRMatrix& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<DynRMatrix> svd(a);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * smax) ++rank;
  return rank;
}

Signature sym_signature(const DynRMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("sym_signature: matrix not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol * scale)
    throw std::invalid_argument("sym_signature: matrix not symmetric");
  Signature s;
  if (m.rows() == 0) return s;
  Eigen::SelfAdjointEigenSolver<DynRMatrix> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double lmax = ev.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= tol * lmax)
      ++s.zero;
    else if (ev(i) > 0)
      ++s.pos;
    else
      ++s.neg;
  }
  return s;
}

}  // namespace kah
