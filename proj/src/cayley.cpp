#include "kah/cayley.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kah {

namespace {

// The generating relations as written: e_i e_j = -e_j e_i = e_k.
constexpr std::array<std::array<int, 3>, 7> kGeneratingRelations{{
    {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 5, 7}, {2, 6, 4}, {3, 5, 6}, {3, 4, 7}}};

}  // namespace

MultTable build_mult_table() {
  MultTable t;
  std::array<std::array<bool, 8>, 8> set{};
  auto put = [&](int i, int j, int sign, int k) {
    if (set[i][j] && !(t.entry[i][j] == TableEntry{sign, k}))
      throw std::logic_error("conflicting table entry at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
    t.entry[i][j] = {sign, k};
    set[i][j] = true;
  };

  for (int j = 0; j < 8; ++j) put(0, j, 1, j);
  for (int i = 1; i < 8; ++i) {
    put(i, 0, 1, i);
    put(i, i, -1, 0);
  }
  for (const auto& tr : kFanoTriples) {
    for (int r = 0; r < 3; ++r) {
      const int a = tr[r], b = tr[(r + 1) % 3], c = tr[(r + 2) % 3];
      put(a, b, 1, c);
      put(b, a, -1, c);
    }
  }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!set[i][j]) throw std::logic_error("incomplete multiplication table");

  for (const auto& rel : kGeneratingRelations) {
    const auto [i, j, k] = rel;
    if (!(t.entry[i][j] == TableEntry{1, k}) || !(t.entry[j][i] == TableEntry{-1, k}))
      throw std::logic_error("table contradicts relation e" + std::to_string(i) + "e" +
                             std::to_string(j) + "=e" + std::to_string(k));
  }
  return t;
}

const MultTable& mult_table() {
  static const MultTable table = build_mult_table();
  return table;
}

Octonion oct_mul(const Octonion& a, const Octonion& b) {
  const MultTable& t = mult_table();
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) {
    if (a.c[i] == cplx{}) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      const TableEntry& e = t.entry[i][j];
      r.c[e.index] += static_cast<double>(e.sign) * a.c[i] * b.c[j];
    }
  }
  return r;
}

Octonion operator*(const Octonion& a, const Octonion& b) { return oct_mul(a, b); }

cplx bilinear_form(const Octonion& a, const Octonion& b) {
  cplx s{};
  for (std::size_t i = 0; i < 8; ++i) s += a.c[i] * b.c[i];
  return s;
}

Octonion oct_conj(const Octonion& a) {
  Octonion r = a;
  for (std::size_t i = 1; i < 8; ++i) r.c[i] = -r.c[i];
  return r;
}

Octonion real_part(const Octonion& a) {
  Octonion r;
  r.c[0] = a.c[0];
  return r;
}

Octonion imag_octonion_part(const Octonion& a) {
  Octonion r = a;
  r.c[0] = 0.0;
  return r;
}

double max_abs(const Octonion& a) {
  double m = 0.0;
  for (const auto& v : a.c) m = std::max(m, std::abs(v));
  return m;
}

double norm2(const Octonion& a) {
  double s = 0.0;
  for (const auto& v : a.c) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace kah
