// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_CLI_HPP
#define UNITY_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace unity::cli {

inline constexpr const char* kToolVersion = "unity-sim 1.0.0";

// Exit codes: 0 success, 1 verification violations, 2 usage/parse error,
// 3 runtime stall.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitStall = 3;

/// Worker count resolution: UNITY_SIM_WORKERS beats the flag beats the
/// hardware default.
unsigned resolve_workers(unsigned flag_value);

/// Load a scenario file, apply --override key=value pairs (dotted paths
/// into the JSON document) and an optional --seed, run the experiment, and
/// write summary.json, sample CSVs, and manifest.json into out_dir. The
/// summary is also printed to `out`.
int cmd_run(const std::filesystem::path& scenario_file, const std::vector<std::string>& overrides,
            const std::filesystem::path& out_dir, std::ostream& out, unsigned workers);

/// Replay a chain dump through full block validation with a simulated
/// clock equal to each block's timestamp. Prints one line per violation:
/// "<height> <block-id> <variant> <detail>".
int cmd_verify(const std::filesystem::path& chain_dump, const std::filesystem::path& params_file,
               std::ostream& out);

/// Run the scenario once per axis value; write sweep.csv with one row per
/// value: axis_value, headline_stat, stderr.
int cmd_sweep(const std::filesystem::path& scenario_file, const std::string& axis,
              const std::vector<double>& values, const std::vector<std::string>& overrides,
              const std::filesystem::path& out_dir, std::ostream& out, unsigned workers);

/// Full argv interface (the `unity-sim` binary is a thin wrapper).
int run_main(int argc, const char* const* argv);

} // namespace unity::cli

#endif // UNITY_CLI_HPP
