#include "xswap/cli/state_file.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace xswap::cli {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed, const char* where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ParseError(std::string(where) + ": unknown key '" + key + "'");
  }
}

double finite_number(const json& v, const char* where) {
  if (!v.is_number()) throw ParseError(std::string(where) + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(std::string(where) + ": non-finite number");
  return d;
}

Complex parse_complex(const json& v, const char* where) {
  if (v.is_number()) return {finite_number(v, where), 0.0};
  if (!v.is_object()) throw ParseError(std::string(where) + ": expected a complex value");
  if (v.contains("re") || v.contains("im")) {
    require_keys(v, {"re", "im"}, where);
    if (!v.contains("re") || !v.contains("im"))
      throw ParseError(std::string(where) + ": need both 're' and 'im'");
    return {finite_number(v["re"], where), finite_number(v["im"], where)};
  }
  if (v.contains("mod") || v.contains("phase_rad")) {
    require_keys(v, {"mod", "phase_rad"}, where);
    if (!v.contains("mod") || !v.contains("phase_rad"))
      throw ParseError(std::string(where) + ": need both 'mod' and 'phase_rad'");
    const double mod = finite_number(v["mod"], where);
    if (mod < 0.0) throw ParseError(std::string(where) + ": 'mod' must be non-negative");
    return std::polar(mod, finite_number(v["phase_rad"], where));
  }
  throw ParseError(std::string(where) + ": expected {re, im} or {mod, phase_rad}");
}

XState parse_state(const json& v) {
  if (!v.is_object()) throw ParseError("state: expected an object");

  if (v.contains("matrix")) {
    require_keys(v, {"matrix"}, "state");
    const json& rows = v["matrix"];
    if (!rows.is_array() || rows.size() != 4) throw ParseError("matrix: expected 4 rows");
    CMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i) {
      if (!rows[i].is_array() || rows[i].size() != 4)
        throw ParseError("matrix: each row needs 4 entries");
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = parse_complex(rows[i][j], "matrix entry");
    }
    return from_matrix(m);
  }

  require_keys(v, {"diag", "o14", "o23"}, "state");
  for (const char* key : {"diag", "o14", "o23"})
    if (!v.contains(key)) throw ParseError(std::string("state: missing key '") + key + "'");
  const json& diag = v["diag"];
  if (!diag.is_array() || diag.size() != 4) throw ParseError("diag: expected 4 numbers");

  XState x{finite_number(diag[0], "diag"), finite_number(diag[1], "diag"),
           finite_number(diag[2], "diag"), finite_number(diag[3], "diag"),
           parse_complex(v["o14"], "o14"),  parse_complex(v["o23"], "o23")};
  require_valid(x);
  return x;
}

}  // namespace

StateFile parse_state_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");

  StateFile file;
  if (doc.contains("states")) {
    require_keys(doc, {"states"}, "document");
    const json& list = doc["states"];
    if (!list.is_array() || list.empty() || list.size() > 2)
      throw ParseError("states: expected an array of one or two states");
    for (const auto& s : list) file.states.push_back(parse_state(s));
  } else {
    file.states.push_back(parse_state(doc));
  }
  return file;
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_file(buf.str());
}

nlohmann::json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::json to_json(const XState& x) {
  return {{"diag", {x.d11, x.d22, x.d33, x.d44}}, {"o14", to_json(x.o14)}, {"o23", to_json(x.o23)}};
}

std::string format_state_line(const XState& x) { return to_json(x).dump(); }

}  // namespace xswap::cli
