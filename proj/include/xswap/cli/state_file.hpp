// state_file.hpp: JSON state files.
//
// A document is either one state object or {"states": [state, state?]}.
// A state object is either
//   {"diag": [d11, d22, d33, d44], "o14": <complex>, "o23": <complex>}
// or
//   {"matrix": [[<complex> x4] x4]}
// where <complex> is {"re": x, "im": y}, {"mod": r, "phase_rad": t}, or a
// bare number. Unknown keys are rejected. Matrices must have the X pattern.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "xswap/xstate.hpp"

namespace xswap::cli {

/// Malformed document or schema violation.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input or output file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StateFile {
  std::vector<XState> states;  // one or two
};

/// Throws ParseError for schema problems, InvalidStateError or
/// NonXStateError when a well-formed state is not a valid X-state.
StateFile parse_state_file(std::string_view text);
StateFile read_state_file(const std::filesystem::path& path);

/// Canonical re/im encoding.
nlohmann::json to_json(const XState& x);
nlohmann::json to_json(Complex z);

/// Single-line JSON document holding one state.
std::string format_state_line(const XState& x);

}  // namespace xswap::cli
