#include "xswap/cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "xswap/cli/state_file.hpp"
#include "xswap/swap.hpp"

namespace xswap::cli {

namespace {

using nlohmann::json;

std::string num(double v, int digits = 10) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string num(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

// Maps library exceptions onto the stable exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kParse;
  } catch (const NonXStateError& e) {
    err << "error: " << e.what() << " (X-defect " << num(e.defect(), 3) << ")\n";
    return exit_code::kInvalidState;
  } catch (const InvalidStateError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInvalidState;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kIo;
  } catch (const SamplerExhausted& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kSamplerCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kParse;
  }
}

std::string_view condition_name(const ThresholdReport& r) {
  if (!r.input_entangled) return "none";
  switch (r.regime) {
    case OutcomeRegime::FourEntangled: return "four-outcome";
    case OutcomeRegime::TwoEntangled: return "two-outcome";
    case OutcomeRegime::AllSeparable: return "none";
  }
  return "none";
}

std::string_view condition_text(const ThresholdReport& r) {
  if (!r.input_entangled) return "none (input is separable)";
  switch (r.regime) {
    case OutcomeRegime::FourEntangled:
      return "four-outcome: |o14|^2 + |o23|^2 > d11 d33 + d22 d44";
    case OutcomeRegime::TwoEntangled:
      return "two-outcome: d11 d33 + d22 d44 >= |o14|^2 + |o23|^2 > 2 sqrt(d11 d22 d33 d44)";
    case OutcomeRegime::AllSeparable: return "none";
  }
  return "none";
}

json thresholds_json(const ThresholdReport& r) {
  return {{"c_in", r.c_in},
          {"c_th_min", r.c_th_min},
          {"c_th_max", r.c_th_max},
          {"regime", to_string(r.regime)},
          {"condition", condition_name(r)},
          {"input_entangled", r.input_entangled},
          {"min_radicand_clamped", r.min_radicand_clamped},
          {"max_radicand_clamped", r.max_radicand_clamped}};
}

void print_thresholds(const ThresholdReport& r, std::ostream& out) {
  out << "C_in       " << num(r.c_in) << '\n'
      << "C_th_min   " << num(r.c_th_min) << (r.min_radicand_clamped ? "  (radicand clamped)" : "")
      << '\n'
      << "C_th_max   " << num(r.c_th_max) << (r.max_radicand_clamped ? "  (radicand clamped)" : "")
      << '\n'
      << "regime     " << to_string(r.regime) << '\n'
      << "condition  " << condition_text(r) << '\n';
}

std::ostream& open_output(const std::optional<std::filesystem::path>& path, std::ofstream& file,
                          std::ostream& fallback) {
  if (!path) return fallback;
  file.open(*path, std::ios::out | std::ios::trunc | std::ios::binary);
  if (!file) throw IoError("cannot write '" + path->string() + "'");
  return file;
}

void finish_output(const std::optional<std::filesystem::path>& path, std::ofstream& file) {
  if (!path) return;
  file.flush();
  if (!file) throw IoError("failed writing '" + path->string() + "'");
}

}  // namespace

int cmd_swap(const std::filesystem::path& input, OutputFormat format, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const StateFile file = read_state_file(input);
    const bool equal = file.states.size() == 1;
    const XState& x = file.states.front();
    const XState& xp = equal ? x : file.states.back();
    const SwapOutcomeSet set = swap_outcomes(x, xp);

    if (format == OutputFormat::Machine) {
      json doc;
      doc["equal_inputs"] = equal;
      doc["outcomes"] = json::array();
      for (const auto& o : set.outcomes) {
        doc["outcomes"].push_back({{"label", to_string(o.label)},
                                   {"probability", o.probability},
                                   {"state", o.defined() ? to_json(*o.state) : json(nullptr)},
                                   {"concurrence", o.defined() ? json(o.concurrence) : json(nullptr)}});
      }
      if (equal) doc["thresholds"] = thresholds_json(thresholds(x));
      out << doc.dump(2) << '\n';
      return exit_code::kOk;
    }

    out << "inputs     " << (equal ? "equal (both pairs in the same state)" : "distinct") << "\n\n";
    char header[256];
    std::snprintf(header, sizeof(header), "%-8s %-15s %-15s %-15s %-15s %-15s %-15s %-29s %s\n",
                  "outcome", "probability", "concurrence", "d11", "d22", "d33", "d44", "o14", "o23");
    out << header;
    for (const auto& o : set.outcomes) {
      char head[64];
      std::snprintf(head, sizeof(head), "%-8s %-15s ", std::string(to_string(o.label)).c_str(),
                    num(o.probability).c_str());
      out << head;
      if (!o.defined()) {
        out << "undefined (outcome never occurs)\n";
        continue;
      }
      const XState& s = *o.state;
      char row[256];
      std::snprintf(row, sizeof(row), "%-15s %-15s %-15s %-15s %-15s %-29s %s",
                    num(o.concurrence).c_str(), num(s.d11).c_str(), num(s.d22).c_str(),
                    num(s.d33).c_str(), num(s.d44).c_str(), num(s.o14).c_str(),
                    num(s.o23).c_str());
      out << row << '\n';
    }
    if (equal) {
      out << '\n';
      print_thresholds(thresholds(x), out);
    }
    return exit_code::kOk;
  });
}

int cmd_classify(const std::filesystem::path& input, OutputFormat format, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const StateFile file = read_state_file(input);
    if (file.states.size() != 1) throw ParseError("classify expects exactly one state");
    const ThresholdReport report = thresholds(file.states.front());
    if (format == OutputFormat::Machine) {
      out << thresholds_json(report).dump(2) << '\n';
    } else {
      print_thresholds(report, out);
    }
    return exit_code::kOk;
  });
}

int cmd_sweep(const SweepSpec& spec, const std::optional<std::filesystem::path>& out_path,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(spec);
    std::ofstream file;
    std::ostream& sink = open_output(out_path, file, out);
    write_sweep_csv(spec, sink);
    finish_output(out_path, file);
    return exit_code::kOk;
  });
}

int cmd_verify(std::size_t n, std::uint64_t seed, OutputFormat format, std::ostream& out,
               std::ostream& err, const OutcomeFn& outcomes) {
  return guarded(err, [&] {
    if (n == 0) throw std::invalid_argument("verify: --n must be at least 1");
    const VerifyReport r = run_verification(n, seed, outcomes);
    if (format == OutputFormat::Machine) {
      const json doc = {{"pairs", r.pairs},
                        {"equal_cases", r.equal_cases},
                        {"seed", seed},
                        {"max_matrix_deviation", r.max.matrix},
                        {"max_probability_deviation", r.max.probability},
                        {"max_concurrence_deviation", r.max.concurrence},
                        {"max_equal_input_deviation", r.max.equal_input},
                        {"definedness_mismatches", r.max.definedness_mismatches},
                        {"bound", r.bound},
                        {"passed", r.passed()}};
      out << doc.dump(2) << '\n';
    } else {
      out << "pairs                    " << r.pairs << '\n'
          << "equal-input cases        " << r.equal_cases << '\n'
          << "seed                     " << seed << '\n'
          << "max matrix deviation     " << num(r.max.matrix, 3) << '\n'
          << "max probability dev.     " << num(r.max.probability, 3) << '\n'
          << "max concurrence dev.     " << num(r.max.concurrence, 3) << '\n'
          << "max equal-input dev.     " << num(r.max.equal_input, 3) << '\n'
          << "definedness mismatches   " << r.max.definedness_mismatches << '\n'
          << "bound                    " << num(r.bound, 3) << '\n'
          << "result                   " << (r.passed() ? "PASS" : "FAIL") << '\n';
    }
    return r.passed() ? exit_code::kOk : exit_code::kVerificationFailed;
  });
}

int cmd_sample(std::size_t n, std::uint64_t seed, SampleConstraint constraint,
               const std::optional<std::filesystem::path>& out_path, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    if (n == 0) throw std::invalid_argument("sample: --n must be at least 1");
    SplitMix64 rng(seed);
    std::vector<std::string> lines;
    lines.reserve(n);
    for (std::size_t i = 0; i < n; ++i) lines.push_back(format_state_line(sample_xstate(rng, constraint)));

    std::ofstream file;
    std::ostream& sink = open_output(out_path, file, out);
    for (const auto& line : lines) sink << line << '\n';
    finish_output(out_path, file);
    return exit_code::kOk;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement swapping for two-qubit X-states"};
  app.name("xswap");
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  std::string format = "text";
  std::string family = "alpha";
  std::string constraint = "any";
  double start = 0.0, stop = 1.0;
  std::size_t points = kDefaultGridPoints;
  std::size_t n = 1000;
  std::uint64_t seed = 1;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
  };

  auto* swap = app.add_subcommand("swap", "Outcome states, probabilities and concurrences");
  swap->add_option("--input", input, "State file (one or two states)")->required();
  add_format(swap);

  auto* classify = app.add_subcommand("classify", "Thresholds and outcome regime for equal inputs");
  classify->add_option("--input", input, "State file (one state)")->required();
  add_format(classify);

  auto* sweep = app.add_subcommand("sweep", "CSV sweep over a state family");
  sweep->add_option("--family", family, "pure, werner, alpha or beta")
      ->check(CLI::IsMember({"pure", "werner", "alpha", "beta"}))
      ->required();
  sweep->add_option("--start", start, "First parameter value")->capture_default_str();
  sweep->add_option("--stop", stop, "Last parameter value")->capture_default_str();
  sweep->add_option("--points", points, "Grid points, inclusive")->capture_default_str();
  sweep->add_option("--out", out_path, "CSV path (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against the oracle");
  verify->add_option("--n", n, "Random cases of each kind")->capture_default_str();
  verify->add_option("--seed", seed, "Generator seed")->capture_default_str();
  add_format(verify);

  auto* sample = app.add_subcommand("sample", "Emit random X-states, one JSON document per line");
  sample->add_option("--n", n, "Number of states")->capture_default_str();
  sample->add_option("--seed", seed, "Generator seed")->capture_default_str();
  sample->add_option("--constraint", constraint, "any, separable or entangled")
      ->check(CLI::IsMember({"any", "separable", "entangled"}))
      ->capture_default_str();
  sample->add_option("--out", out_path, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? exit_code::kOk : exit_code::kParse;
  }

  const OutputFormat fmt = format == "machine" ? OutputFormat::Machine : OutputFormat::Text;
  const auto optional_path = [&]() -> std::optional<std::filesystem::path> {
    if (out_path.empty()) return std::nullopt;
    return std::filesystem::path(out_path);
  };

  if (swap->parsed()) return cmd_swap(input, fmt, out, err);
  if (classify->parsed()) return cmd_classify(input, fmt, out, err);
  if (sweep->parsed()) {
    SweepSpec spec{*parse_sweep_family(family), start, stop, points};
    return cmd_sweep(spec, optional_path(), out, err);
  }
  if (verify->parsed()) return cmd_verify(n, seed, fmt, out, err);
  if (sample->parsed()) {
    return cmd_sample(n, seed, *parse_constraint(constraint), optional_path(), out, err);
  }
  return exit_code::kParse;
}

}  // namespace xswap::cli
