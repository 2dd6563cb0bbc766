// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "unity/cli.hpp"

using namespace unity;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("unity-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
};

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& text) {
    const fs::path p = dir / name;
    std::ofstream out(p, std::ios::binary);
    out << text;
    return p;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kSmallSteady = R"({
  "type": "steady_state",
  "params": {"T": 10, "alpha": 0.025},
  "actors": [{"id": "pool", "hash_rate": 500000, "stake": 500000, "behavior": "honest"}],
  "duration_blocks": 2000,
  "trials": 1,
  "rng_seed": 7
})";

} // namespace

TEST_CASE("run writes the full artifact contract and is byte-deterministic") {
    TempDir tmp;
    const fs::path scenario = write_file(tmp.path, "steady.json", kSmallSteady);

    std::ostringstream out1, out2;
    CHECK(cli::cmd_run(scenario, {}, tmp.path / "a", out1, 2) == cli::kExitOk);
    CHECK(cli::cmd_run(scenario, {}, tmp.path / "b", out2, 2) == cli::kExitOk);

    for (const char* name : {"summary.json", "blocktimes_pow.csv", "blocktimes_pos.csv",
                             "difficulty_trace.csv", "chain.jsonl", "params.json",
                             "manifest.json"}) {
        CAPTURE(name);
        CHECK(fs::exists(tmp.path / "a" / name));
    }
    CHECK(read_file(tmp.path / "a/summary.json") == read_file(tmp.path / "b/summary.json"));
    CHECK(read_file(tmp.path / "a/chain.jsonl") == read_file(tmp.path / "b/chain.jsonl"));

    // the manifest lists exactly the files that exist
    const json manifest = json::parse(read_file(tmp.path / "a/manifest.json"));
    for (const auto& artifact : manifest["artifacts"]) {
        CHECK(fs::exists(tmp.path / "a" / artifact.get<std::string>()));
    }
    CHECK(manifest["tool_version"] == cli::kToolVersion);

    // a different seed changes the summary
    std::ostringstream out3;
    CHECK(cli::cmd_run(scenario, {"rng_seed=8"}, tmp.path / "c", out3, 2) == cli::kExitOk);
    CHECK(read_file(tmp.path / "a/summary.json") != read_file(tmp.path / "c/summary.json"));
}

TEST_CASE("overrides beat scenario values") {
    TempDir tmp;
    const fs::path scenario = write_file(tmp.path, "steady.json", kSmallSteady);
    std::ostringstream out;
    REQUIRE(cli::cmd_run(scenario, {"duration_blocks=100", "params.alpha=0.05"},
                         tmp.path / "o", out, 1) == cli::kExitOk);
    const json summary = json::parse(read_file(tmp.path / "o/summary.json"));
    CHECK(summary["total_blocks"] == 100);
    CHECK(summary["params"]["alpha"] == 0.05);
}

TEST_CASE("schema violations exit with the usage code") {
    TempDir tmp;
    std::ostringstream out;

    const fs::path bad_json = write_file(tmp.path, "bad.json", "{\n  \"type\": \n}");
    CHECK(cli::cmd_run(bad_json, {}, tmp.path / "x", out, 1) == cli::kExitUsage);
    // line-anchored: "bad.json:<line>:"
    const std::string msg = out.str();
    const auto anchor = msg.find("bad.json:");
    REQUIRE(anchor != std::string::npos);
    CHECK(std::isdigit(static_cast<unsigned char>(msg[anchor + 9])));

    const fs::path unknown_key = write_file(tmp.path, "unk.json", R"({
      "type": "steady_state",
      "actors": [{"id": "a", "hash_rate": 1, "stake": 1}],
      "duration_blocks": 10,
      "bogus_knob": 3
    })");
    std::ostringstream out2;
    CHECK(cli::cmd_run(unknown_key, {}, tmp.path / "y", out2, 1) == cli::kExitUsage);

    const fs::path no_actors = write_file(tmp.path, "noact.json", R"({
      "type": "steady_state", "actors": [], "duration_blocks": 10
    })");
    std::ostringstream out3;
    CHECK(cli::cmd_run(no_actors, {}, tmp.path / "z", out3, 1) == cli::kExitUsage);
}

TEST_CASE("a stalled scenario exits with the stall code after writing its report") {
    TempDir tmp;
    const fs::path scenario = write_file(tmp.path, "stall.json", R"({
      "type": "steady_state",
      "actors": [{"id": "miner", "hash_rate": 500000, "stake": 0}],
      "duration_blocks": 50,
      "rng_seed": 1
    })");
    std::ostringstream out;
    CHECK(cli::cmd_run(scenario, {}, tmp.path / "s", out, 1) == cli::kExitStall);
    const json summary = json::parse(read_file(tmp.path / "s/summary.json"));
    CHECK(summary["stalled"] == true);
    CHECK(summary["total_blocks"] <= 1);
    CHECK(out.str().find("StallDetected") != std::string::npos);
}

TEST_CASE("verify replays a dump produced by run without violations") {
    TempDir tmp;
    const fs::path scenario = write_file(tmp.path, "steady.json", kSmallSteady);
    std::ostringstream run_out;
    REQUIRE(cli::cmd_run(scenario, {}, tmp.path / "r", run_out, 1) == cli::kExitOk);

    std::ostringstream verify_out;
    CHECK(cli::cmd_verify(tmp.path / "r/chain.jsonl", tmp.path / "r/params.json", verify_out) ==
          cli::kExitOk);
    CHECK(verify_out.str().empty());
}

TEST_CASE("verify flags a seeded interleave fault exactly once") {
    TempDir tmp;
    const fs::path scenario = write_file(tmp.path, "steady.json", kSmallSteady);
    std::ostringstream run_out;
    REQUIRE(cli::cmd_run(scenario, {}, tmp.path / "r", run_out, 1) == cli::kExitOk);

    // inject a leaf work block whose parent is also work-kind
    std::ifstream in(tmp.path / "r/chain.jsonl");
    std::vector<json> lines;
    std::string text;
    while (std::getline(in, text)) lines.push_back(json::parse(text));
    REQUIRE(lines.size() > 10);
    json base;
    for (const json& l : lines) {
        if (l["kind"] == "work") base = l;  // last work block
    }
    json evil = base;
    evil["id"] = std::string(64, 'a');
    evil["parent_id"] = base["id"];
    evil["height"] = base["height"].get<std::uint64_t>() + 1;
    evil["timestamp"] = base["timestamp"].get<double>() + 5.0;
    evil["producer_id"] = "evil";
    lines.push_back(evil);
    std::ostringstream spliced;
    for (const json& l : lines) spliced << l.dump() << '\n';
    write_file(tmp.path, "tampered.jsonl", spliced.str());

    std::ostringstream verify_out;
    CHECK(cli::cmd_verify(tmp.path / "tampered.jsonl", tmp.path / "r/params.json", verify_out) ==
          cli::kExitViolations);
    const std::string report = verify_out.str();
    CHECK(report.find("InterleaveViolation") != std::string::npos);
    CHECK(std::count(report.begin(), report.end(), '\n') == 1);  // exactly one violation line
}

TEST_CASE("verify recomputes the eligibility bound from the dumped seed") {
    TempDir tmp;
    const fs::path scenario = write_file(tmp.path, "steady.json", kSmallSteady);
    std::ostringstream run_out;
    REQUIRE(cli::cmd_run(scenario, {}, tmp.path / "r", run_out, 1) == cli::kExitOk);

    std::ifstream in(tmp.path / "r/chain.jsonl");
    std::vector<json> lines;
    std::string text;
    while (std::getline(in, text)) lines.push_back(json::parse(text));

    // push one stake block below parent + delta: the dumped timestamp equals
    // exactly that bound, so any decrement trips the check
    std::size_t target = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i]["kind"] == "stake") {
            target = i;
            break;
        }
    }
    REQUIRE(target > 0);
    lines[target]["timestamp"] = lines[target]["timestamp"].get<double>() - 0.01;
    std::ostringstream spliced;
    for (const json& l : lines) spliced << l.dump() << '\n';
    write_file(tmp.path, "early.jsonl", spliced.str());

    std::ostringstream verify_out;
    CHECK(cli::cmd_verify(tmp.path / "early.jsonl", tmp.path / "r/params.json", verify_out) ==
          cli::kExitViolations);
    CHECK(verify_out.str().find("TooEarly") != std::string::npos);

    // malformed line: usage error with the line number
    write_file(tmp.path, "broken.jsonl", read_file(tmp.path / "r/chain.jsonl") + "{not json\n");
    std::ostringstream verify_out2;
    CHECK(cli::cmd_verify(tmp.path / "broken.jsonl", tmp.path / "r/params.json", verify_out2) ==
          cli::kExitUsage);
}

TEST_CASE("sweep writes one row per axis value with the headline statistic") {
    TempDir tmp;
    const fs::path scenario = write_file(tmp.path, "ds.json", R"({
      "type": "double_spend",
      "params": {"T": 10, "alpha": 0.025},
      "actors": [{"id": "honest", "hash_rate": 500000, "stake": 500000}],
      "l": 0.9, "horizon": 300, "trials": 40, "rng_seed": 5
    })");
    std::ostringstream out;
    REQUIRE(cli::cmd_sweep(scenario, "k", {0.5, 1.0, 1.5, 2.0}, {}, tmp.path / "sw", out, 4) ==
            cli::kExitOk);
    const std::string csv = read_file(tmp.path / "sw/sweep.csv");
    std::istringstream rows(csv);
    std::string header;
    std::getline(rows, header);
    CHECK(header == "axis_value,headline_stat,stderr");
    std::vector<double> win_rates;
    std::string row;
    while (std::getline(rows, row)) {
        const auto c1 = row.find(',');
        const auto c2 = row.find(',', c1 + 1);
        win_rates.push_back(std::stod(row.substr(c1 + 1, c2 - c1 - 1)));
    }
    REQUIRE(win_rates.size() == 4);
    for (std::size_t i = 1; i < win_rates.size(); ++i) CHECK(win_rates[i] >= win_rates[i - 1]);

    // unknown axis and empty values are usage errors
    std::ostringstream out2;
    CHECK(cli::cmd_sweep(scenario, "nonsense", {1.0}, {}, tmp.path / "sw2", out2, 1) ==
          cli::kExitUsage);
    std::ostringstream out3;
    CHECK(cli::cmd_sweep(scenario, "k", {}, {}, tmp.path / "sw3", out3, 1) == cli::kExitUsage);
}

TEST_CASE("sweeping alpha on a convergence scenario raises difficulty dispersion") {
    TempDir tmp;
    const fs::path scenario = write_file(tmp.path, "conv.json", R"({
      "type": "convergence",
      "params": {"T": 10},
      "actors": [{"id": "pool", "hash_rate": 500000, "stake": 500000}],
      "initial_d_w": 5000000, "initial_d_s": 5000000,
      "duration_blocks": 12000, "rng_seed": 23
    })");
    std::ostringstream out;
    REQUIRE(cli::cmd_sweep(scenario, "alpha", {0.01, 0.05, 0.2}, {}, tmp.path / "sw", out, 1) ==
            cli::kExitOk);
    std::istringstream rows(read_file(tmp.path / "sw/sweep.csv"));
    std::string line;
    std::getline(rows, line);  // header
    std::vector<double> cvs;
    while (std::getline(rows, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        cvs.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
    }
    REQUIRE(cvs.size() == 3);
    CHECK(cvs[0] < cvs[1]);
    CHECK(cvs[1] < cvs[2]);
}

TEST_CASE("worker resolution prefers the environment variable") {
    unsetenv("UNITY_SIM_WORKERS");
    CHECK(cli::resolve_workers(3) == 3);
    setenv("UNITY_SIM_WORKERS", "7", 1);
    CHECK(cli::resolve_workers(3) == 7);
    unsetenv("UNITY_SIM_WORKERS");
    CHECK(cli::resolve_workers(0) >= 1);
}
