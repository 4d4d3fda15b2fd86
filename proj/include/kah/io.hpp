#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "kah/batch.hpp"

namespace kah::io {

using json = nlohmann::ordered_json;

// Malformed or non-finite JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Octonion: array of 8 [re, im] pairs.
json octonion_to_json(const Octonion& x);
Octonion octonion_from_json(const json& j);

// CMatrix: {"rows": 8 arrays of 8 [re, im] pairs}.
json matrix_to_json(const CMatrix& g);
CMatrix matrix_from_json(const json& j);

// 8 x 8 array of {"sign": +-1, "e": index}.
json table_to_json(const MultTable& t);
MultTable table_from_json(const json& j);

json report_to_json(const MembershipReport& r);

// {"pair", "theta", "k", "h", "residual"}
json factors_to_json(const KAHFactors& f);
KAHFactors factors_from_json(const json& j);

json real_form_to_json(const RealFormReport& r);
json visible_to_json(const batch::VisibleSummary& s);

// Reads a whole stream / file ("-" means stdin) and parses it as JSON.
json parse_stream(std::istream& in);
json parse_file(const std::string& path, std::istream& stdin_stream);

}  // namespace kah::io
