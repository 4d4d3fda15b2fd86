#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace kah {

using cplx = std::complex<double>;

// Element of the complexified Cayley algebra. c[i] is the coefficient of e_i.
struct Octonion {
  std::array<cplx, 8> c{};

  static Octonion unit(std::size_t i) {
    Octonion o;
    o.c[i] = 1.0;
    return o;
  }

  cplx& operator[](std::size_t i) { return c[i]; }
  const cplx& operator[](std::size_t i) const { return c[i]; }

  Octonion& operator+=(const Octonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c[i] += o.c[i];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c[i] -= o.c[i];
    return *this;
  }
  Octonion& operator*=(cplx s) {
    for (auto& v : c) v *= s;
    return *this;
  }

  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator*(cplx s, Octonion a) { return a *= s; }
  friend Octonion operator-(Octonion a) { return a *= -1.0; }
  friend bool operator==(const Octonion&, const Octonion&) = default;
};

struct TableEntry {
  int sign = 1;   // +1 or -1
  int index = 0;  // e_index
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

// e_i * e_j = sign * e_index.
struct MultTable {
  std::array<std::array<TableEntry, 8>, 8> entry{};
  const TableEntry& operator()(std::size_t i, std::size_t j) const { return entry[i][j]; }
};

// The seven quaternionic triples (i, j, k) with e_i e_j = e_k, cyclically.
inline constexpr std::array<std::array<int, 3>, 7> kFanoTriples{{
    {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 5, 7}, {2, 6, 4}, {3, 5, 6}, {3, 4, 7}}};

// Builds the full table from kFanoTriples. Aborts (std::logic_error) if a
// derived entry contradicts one of the generating relations.
MultTable build_mult_table();

// Process-wide table, built once.
const MultTable& mult_table();

Octonion oct_mul(const Octonion& a, const Octonion& b);
Octonion operator*(const Octonion& a, const Octonion& b);

// Complex-bilinear (not Hermitian) form: sum_i a_i b_i.
cplx bilinear_form(const Octonion& a, const Octonion& b);

Octonion oct_conj(const Octonion& a);
Octonion real_part(const Octonion& a);
Octonion imag_octonion_part(const Octonion& a);

// max_i |a_i|
double max_abs(const Octonion& a);
// sqrt(sum_i |a_i|^2)
double norm2(const Octonion& a);

}  // namespace kah
