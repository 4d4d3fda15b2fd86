#include "kah/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace kah::io {

namespace {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected [re, im] pair");
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("non-finite entry");
  return {re, im};
}

}  // namespace

json octonion_to_json(const Octonion& x) {
  json a = json::array();
  for (const cplx& z : x.c) a.push_back(complex_to_json(z));
  return a;
}

Octonion octonion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8) throw ParseError("octonion: expected 8 [re, im] pairs");
  Octonion x;
  for (std::size_t i = 0; i < 8; ++i) x.c[i] = complex_from_json(j[i]);
  return x;
}

json matrix_to_json(const CMatrix& g) {
  json rows = json::array();
  for (int i = 0; i < 8; ++i) {
    json row = json::array();
    for (int j = 0; j < 8; ++j) row.push_back(complex_to_json(g(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::move(rows)}};
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows")) throw ParseError("matrix: missing \"rows\"");
  const json& rows = j["rows"];
  if (!rows.is_array() || rows.size() != 8) throw ParseError("matrix: expected 8 rows");
  CMatrix g;
  for (std::size_t i = 0; i < 8; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 8)
      throw ParseError("matrix: row " + std::to_string(i) + " must have 8 entries");
    for (std::size_t k = 0; k < 8; ++k)
      g(static_cast<int>(i), static_cast<int>(k)) = complex_from_json(rows[i][k]);
  }
  return g;
}

json table_to_json(const MultTable& t) {
  json rows = json::array();
  for (const auto& r : t.entry) {
    json row = json::array();
    for (const TableEntry& e : r) row.push_back(json{{"sign", e.sign}, {"e", e.index}});
    rows.push_back(std::move(row));
  }
  return rows;
}

MultTable table_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8) throw ParseError("table: expected 8 rows");
  MultTable t;
  for (std::size_t i = 0; i < 8; ++i) {
    if (!j[i].is_array() || j[i].size() != 8) throw ParseError("table: expected 8 columns");
    for (std::size_t k = 0; k < 8; ++k) {
      const json& e = j[i][k];
      if (!e.is_object() || !e.contains("sign") || !e.contains("e"))
        throw ParseError("table: entry must be {\"sign\", \"e\"}");
      const int sign = e["sign"].get<int>();
      const int idx = e["e"].get<int>();
      if ((sign != 1 && sign != -1) || idx < 0 || idx > 7) throw ParseError("table: bad entry");
      t.entry[i][k] = {sign, idx};
    }
  }
  return t;
}

json report_to_json(const MembershipReport& r) {
  auto flag = [](bool ok, double res) { return json{{"ok", ok}, {"residual", res}}; };
  return json{{"tol", r.tol},
              {"orthogonal", flag(r.orthogonal, r.orthogonal_residual)},
              {"special", flag(r.special, r.special_residual)},
              {"fixes_e0", flag(r.fixes_e0, r.fixes_e0_residual)},
              {"fixes_e1", flag(r.fixes_e1, r.fixes_e1_residual)},
              {"is_automorphism", flag(r.is_automorphism, r.automorphism_residual)},
              {"has_triality_companion", flag(r.has_triality_companion, r.companion_residual)},
              {"is_real", flag(r.is_real, r.real_residual)}};
}

json factors_to_json(const KAHFactors& f) {
  return json{{"pair", std::string(to_string(f.pair))},
              {"theta", f.theta},
              {"k", matrix_to_json(f.k)},
              {"h", matrix_to_json(f.h)},
              {"residual", f.residual}};
}

KAHFactors factors_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("factors: expected object");
  for (const char* key : {"pair", "theta", "k", "h", "residual"})
    if (!j.contains(key)) throw ParseError(std::string("factors: missing \"") + key + "\"");
  KAHFactors f;
  const auto pair = parse_pair(j["pair"].get<std::string>());
  if (!pair) throw ParseError("factors: unknown pair");
  f.pair = *pair;
  f.theta = j["theta"].get<double>();
  f.k = matrix_from_json(j["k"]);
  f.h = matrix_from_json(j["h"]);
  f.residual = j["residual"].get<double>();
  return f;
}

json real_form_to_json(const RealFormReport& r) {
  return json{{"algebra", std::string(to_string(r.tag))},
              {"dim", r.dim_fixed},
              {"dim_k", r.dim_k},
              {"dim_p", r.dim_p},
              {"signature", json{{"pos", r.signature.pos}, {"neg", r.signature.neg}, {"zero", r.signature.zero}}},
              {"rank", r.real_rank_estimate},
              {"rank_trials", r.rank_trials},
              {"inconclusive", r.inconclusive}};
}

json visible_to_json(const batch::VisibleSummary& s) {
  return json{{"pair", std::string(to_string(s.pair))},
              {"samples", s.samples},
              {"seed", s.seed},
              {"scale", s.scale},
              {"v1_residual", s.v1_residual},
              {"s1_residual", s.s1_residual},
              {"s2_residual", s.s2_residual},
              {"failures", s.failures},
              {"errors", s.errors},
              {"ok", s.ok}};
}

json parse_stream(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json parse_file(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return parse_stream(stdin_stream);
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return parse_stream(f);
}

}  // namespace kah::io
