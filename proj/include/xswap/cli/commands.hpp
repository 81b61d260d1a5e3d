// commands.hpp: the xswap subcommands as callable functions.
//
// Every command writes to the given streams and returns a process exit code.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

#include "xswap/cli/random.hpp"
#include "xswap/cli/sweep.hpp"
#include "xswap/cli/verify.hpp"

namespace xswap::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kParse = 2;
inline constexpr int kInvalidState = 3;
inline constexpr int kIo = 4;
inline constexpr int kSamplerCap = 5;
}  // namespace exit_code

enum class OutputFormat { Text, Machine };

/// One state in the file means both pairs start in that state.
int cmd_swap(const std::filesystem::path& input, OutputFormat format, std::ostream& out,
             std::ostream& err);

/// Requires exactly one state.
int cmd_classify(const std::filesystem::path& input, OutputFormat format, std::ostream& out,
                 std::ostream& err);

/// Writes CSV to `out_path`, or to `out` when no path is given.
int cmd_sweep(const SweepSpec& spec, const std::optional<std::filesystem::path>& out_path,
              std::ostream& out, std::ostream& err);

int cmd_verify(std::size_t n, std::uint64_t seed, OutputFormat format, std::ostream& out,
               std::ostream& err, const OutcomeFn& outcomes = swap_outcomes);

/// One JSON state document per line.
int cmd_sample(std::size_t n, std::uint64_t seed, SampleConstraint constraint,
               const std::optional<std::filesystem::path>& out_path, std::ostream& out,
               std::ostream& err);

/// Parses argv and dispatches. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xswap::cli
