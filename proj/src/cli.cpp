// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "unity/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unity/consensus.hpp"
#include "unity/stats.hpp"
#include "unity/sim/attacks.hpp"
#include "unity/sim/engine.hpp"

namespace unity::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace unity::sim;

namespace {

// ---------------------------------------------------------------- helpers

std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return {buf, res.ptr};
}

// Human-facing statistics are rounded to 6 decimal places; bulk CSV and
// dump files keep full round-trip precision.
double round6(double v) { return std::round(v * 1e6) / 1e6; }

json null_or(double v, bool valid) { return valid ? json(round6(v)) : json(nullptr); }

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(path.string() + ":" + std::to_string(line_of_offset(text, e.byte)) +
                         ": " + e.what());
    }
}

// --override key=value with dotted paths into the scenario document.
void apply_override(json& doc, const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
        throw UsageError("override must look like key=value: " + spec);
    const std::string path = spec.substr(0, eq);
    const std::string value = spec.substr(eq + 1);

    json* node = &doc;
    std::size_t start = 0;
    while (true) {
        const auto dot = path.find('.', start);
        const std::string key = path.substr(start, dot == std::string::npos ? dot : dot - start);
        if (key.empty()) throw UsageError("bad override path: " + path);
        if (dot == std::string::npos) {
            json parsed = json::parse(value, nullptr, false);
            (*node)[key] = parsed.is_discarded() ? json(value) : parsed;
            return;
        }
        node = &(*node)[key];
        if (!node->is_object() && !node->is_null()) throw UsageError("bad override path: " + path);
        start = dot + 1;
    }
}

json params_to_json(const ProtocolParams& p) {
    return {{"T", p.target_block_time},
            {"alpha", p.alpha},
            {"unlock_delay", p.unlock_delay},
            {"genesis_d_w", p.genesis_d_w},
            {"genesis_d_s", p.genesis_d_s},
            {"max_future_drift", p.max_future_drift},
            {"genesis_seed_0", to_hex(p.genesis_seed_0)},
            {"genesis_seed_1", to_hex(p.genesis_seed_1)},
            {"pow_hash", std::string(to_string(p.pow_hash))}};
}

json block_to_json(const Block& b) {
    json line{{"id", to_hex(b.id)},
              {"parent_id", to_hex(b.parent_id)},
              {"kind", std::string(to_string(b.kind))},
              {"height", b.height},
              {"timestamp", b.timestamp},
              {"difficulty", b.difficulty},
              {"producer_id", b.producer_id}};
    if (b.is_work()) {
        line["nonce"] = to_hex(b.nonce());
    } else {
        line["seed"] = to_hex(b.seed());
    }
    return line;
}

// ------------------------------------------------------------- summaries

json block_time_report(const std::vector<double>& deltas) {
    const SummaryStats s = summarize(deltas);
    json rep{{"n", deltas.size()},
             {"mean", null_or(s.mean, s.n > 0)},
             {"std", null_or(s.std_dev, s.n > 0)},
             {"min", null_or(s.min, s.n > 0)},
             {"max", null_or(s.max, s.n > 0)},
             {"ks_statistic", nullptr},
             {"ks_critical_1pct", nullptr},
             {"ks_pass_1pct", nullptr}};
    return rep;
}

void add_ks(json& rep, const std::vector<double>& deltas, double rate) {
    if (deltas.size() < 1000) return;  // too few samples for a meaningful fit
    const KsReport ks = ks_test_exponential(deltas, rate, 0.01);
    rep["ks_statistic"] = round6(ks.statistic);
    rep["ks_critical_1pct"] = round6(ks.critical);
    rep["ks_pass_1pct"] = ks.pass;
}

json difficulty_report(const std::vector<ChainStats::DifficultySample>& trace) {
    std::vector<double> values;
    values.reserve(trace.size());
    for (const auto& t : trace) values.push_back(t.difficulty);
    const SummaryStats s = summarize(values);
    return {{"n", trace.size()},
            {"mean", null_or(s.mean, s.n > 0)},
            {"std", null_or(s.std_dev, s.n > 0)},
            {"final", null_or(trace.empty() ? 0.0 : trace.back().difficulty, !trace.empty())}};
}

json actor_entries_json(const ScenarioConfig& config, const ChainStats& stats) {
    json arr = json::array();
    for (const FairnessEntry& e : fairness_entries(config, stats)) {
        arr.push_back({{"id", e.id},
                       {"work_blocks", e.work_blocks},
                       {"stake_blocks", e.stake_blocks},
                       {"total_ratio", round6(e.total_ratio)},
                       {"pow_ratio", round6(e.pow_ratio)},
                       {"pos_ratio", round6(e.pos_ratio)}});
    }
    return arr;
}

json chain_summary(const ScenarioConfig& config, const ChainRun& run) {
    const ChainStats& stats = run.stats;
    const std::vector<double> work = stats.work_deltas();
    const std::vector<double> stake = stats.stake_deltas();
    const double rate = config.params.lambda();

    json work_rep = block_time_report(work);
    json stake_rep = block_time_report(stake);
    add_ks(work_rep, work, rate);
    add_ks(stake_rep, stake, rate);

    const Histogram hw = histogram(work, config.bins, config.bin_width);
    const Histogram hs = histogram(stake, config.bins, config.bin_width);

    const double chain_time = std::max(stats.work_blocks.empty() ? 0.0 : stats.work_blocks.back().timestamp,
                                       stats.stake_blocks.empty() ? 0.0 : stats.stake_blocks.back().timestamp);

    return {{"type", std::string(to_string(config.type))},
            {"rng_seed", config.rng_seed},
            {"params", params_to_json(config.params)},
            {"total_blocks", stats.total_blocks},
            {"chain_time_seconds", round6(chain_time)},
            {"stalled", stats.stalled},
            {"stall_height", stats.stall_height},
            {"stall_detail", stats.stall_detail},
            {"total_difficulty", {{"work", round6(run.tip_totals.work)},
                                  {"stake", round6(run.tip_totals.stake)}}},
            {"actors", actor_entries_json(config, stats)},
            {"block_time", {{"work", work_rep}, {"stake", stake_rep}}},
            {"difficulty", {{"work", difficulty_report(stats.work_difficulty)},
                            {"stake", difficulty_report(stats.stake_difficulty)}}},
            {"histogram", {{"bins", config.bins},
                           {"bin_width", config.bin_width},
                           {"work", hw.counts},
                           {"work_overflow", hw.overflow},
                           {"stake", hs.counts},
                           {"stake_overflow", hs.overflow}}}};
}

// ------------------------------------------------------------- artifacts

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

void write_blocktimes_csv(const fs::path& path,
                          const std::vector<ChainStats::BlockSample>& samples) {
    std::ostringstream out;
    out << "height,timestamp,delta_seconds\n";
    for (const auto& s : samples) {
        out << s.height << ',' << fmt_double(s.timestamp) << ',' << fmt_double(s.delta) << '\n';
    }
    write_text(path, out.str());
}

void write_difficulty_csv(const fs::path& path, const ChainStats& stats) {
    std::ostringstream out;
    out << "height,kind,difficulty\n";
    std::size_t iw = 0, is = 0;
    const auto& w = stats.work_difficulty;
    const auto& s = stats.stake_difficulty;
    while (iw < w.size() || is < s.size()) {
        const bool take_work =
            is >= s.size() || (iw < w.size() && w[iw].height < s[is].height);
        if (take_work) {
            out << w[iw].height << ",work," << fmt_double(w[iw].difficulty) << '\n';
            ++iw;
        } else {
            out << s[is].height << ",stake," << fmt_double(s[is].difficulty) << '\n';
            ++is;
        }
    }
    write_text(path, out.str());
}

void write_chain_dump(const fs::path& path, const ChainStore& store) {
    std::ostringstream out;
    for (const Block* b : store.canonical_chain()) out << block_to_json(*b).dump() << '\n';
    write_text(path, out.str());
}

void write_params_file(const fs::path& path, const ScenarioConfig& config) {
    json doc = params_to_json(config.params);
    json stakes = json::object();
    for (const ActorSpec& a : config.actors) {
        if (a.stake > 0) stakes[a.id] = a.stake;
    }
    doc["stakes"] = stakes;
    write_text(path, doc.dump(2) + "\n");
}

void write_chain_artifacts(const fs::path& out_dir, const ScenarioConfig& config,
                           const ChainRun& run, std::vector<std::string>& artifacts) {
    write_blocktimes_csv(out_dir / "blocktimes_pow.csv", run.stats.work_blocks);
    artifacts.push_back("blocktimes_pow.csv");
    write_blocktimes_csv(out_dir / "blocktimes_pos.csv", run.stats.stake_blocks);
    artifacts.push_back("blocktimes_pos.csv");
    write_difficulty_csv(out_dir / "difficulty_trace.csv", run.stats);
    artifacts.push_back("difficulty_trace.csv");
    write_chain_dump(out_dir / "chain.jsonl", *run.store);
    artifacts.push_back("chain.jsonl");
    write_params_file(out_dir / "params.json", config);
    artifacts.push_back("params.json");
}

void write_manifest(const fs::path& out_dir, const fs::path& scenario_file,
                    const ScenarioConfig& config, const std::vector<std::string>& artifacts,
                    double wall_seconds) {
    const json manifest{{"scenario_path", scenario_file.string()},
                        {"resolved_config", config.to_json()},
                        {"rng_seed", config.rng_seed},
                        {"artifacts", artifacts},
                        {"wall_clock_seconds", wall_seconds},
                        {"tool_version", kToolVersion}};
    write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

} // namespace

unsigned resolve_workers(unsigned flag_value) {
    if (const char* env = std::getenv("UNITY_SIM_WORKERS")) {
        const auto parsed = std::strtoul(env, nullptr, 10);
        if (parsed > 0) return static_cast<unsigned>(parsed);
    }
    if (flag_value > 0) return flag_value;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

int cmd_run(const fs::path& scenario_file, const std::vector<std::string>& overrides,
            const fs::path& out_dir, std::ostream& out, unsigned workers) {
    ScenarioConfig config;
    try {
        json doc = load_json_file(scenario_file);
        for (const std::string& o : overrides) apply_override(doc, o);
        config = ScenarioConfig::from_json(doc);
    } catch (const std::exception& e) {
        out << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    fs::create_directories(out_dir);
    const auto t0 = std::chrono::steady_clock::now();
    json summary;
    std::vector<std::string> artifacts;
    int exit_code = kExitOk;

    switch (config.type) {
        case ScenarioType::SteadyState:
        case ScenarioType::Convergence: {
            const ChainRun run = run_steady_state(config);
            summary = chain_summary(config, run);
            write_chain_artifacts(out_dir, config, run, artifacts);
            if (run.stats.stalled) exit_code = kExitStall;
            break;
        }
        case ScenarioType::Fairness: {
            const FairnessReport rep = run_fairness(config);
            summary = chain_summary(config, rep.run);
            write_chain_artifacts(out_dir, config, rep.run, artifacts);
            if (rep.run.stats.stalled) exit_code = kExitStall;
            break;
        }
        case ScenarioType::Collusion: {
            const CollusionReport rep = run_collusion_headstart(config);
            summary = chain_summary(config, rep.run);
            summary["collusion"] = {{"colluder", rep.colluder_id},
                                    {"hash_share", round6(rep.hash_share)},
                                    {"work_share", round6(rep.work_share)},
                                    {"excess_share", round6(rep.excess_share)}};
            write_chain_artifacts(out_dir, config, rep.run, artifacts);
            if (rep.run.stats.stalled) exit_code = kExitStall;
            break;
        }
        case ScenarioType::DoubleSpend: {
            const DoubleSpendResult res = run_double_spend(config, workers);
            const SummaryStats margins = summarize(res.margins);
            summary = {{"type", std::string(to_string(config.type))},
                       {"rng_seed", config.rng_seed},
                       {"params", params_to_json(config.params)},
                       {"k", config.k},
                       {"l", config.l},
                       {"horizon", config.horizon},
                       {"trials", res.trials},
                       {"wins", res.wins},
                       {"win_rate", round6(res.win_rate)},
                       {"margin_mean", null_or(margins.mean, margins.n > 0)},
                       {"margin_min", null_or(margins.min, margins.n > 0)},
                       {"margin_max", null_or(margins.max, margins.n > 0)},
                       {"analytic_expected_win",
                        expected_double_spend_win(config.k, config.l, config.params.genesis_d_w,
                                                  config.params.genesis_d_s)}};
            std::ostringstream trials_csv;
            trials_csv << "trial,win,margin\n";
            for (std::size_t t = 0; t < res.margins.size(); ++t) {
                const bool win = res.margins[t] > 0.0;
                trials_csv << t << ',' << (win ? 1 : 0) << ',' << fmt_double(res.margins[t])
                           << '\n';
            }
            write_text(out_dir / "trials.csv", trials_csv.str());
            artifacts.push_back("trials.csv");
            break;
        }
        case ScenarioType::StakeGrinding: {
            const GrindingResult res = run_stake_grinding(config);
            const double sigma =
                res.windows ? std::sqrt(res.closed_form * (1.0 - res.closed_form) /
                                        static_cast<double>(res.windows))
                            : 0.0;
            summary = {{"type", std::string(to_string(config.type))},
                       {"rng_seed", config.rng_seed},
                       {"params", params_to_json(config.params)},
                       {"p", round6(res.p)},
                       {"x", res.x},
                       {"windows", res.windows},
                       {"closed_form", res.closed_form},
                       {"empirical", res.empirical},
                       {"lockout_closed_form", res.lockout_closed_form},
                       {"empirical_lockout", res.empirical_lockout},
                       {"binomial_sigma", sigma}};
            break;
        }
    }

    write_text(out_dir / "summary.json", summary.dump(2) + "\n");
    artifacts.push_back("summary.json");
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(out_dir, scenario_file, config, artifacts, wall);

    out << summary.dump(2) << '\n';
    if (exit_code == kExitStall) out << "StallDetected: " << summary["stall_detail"] << '\n';
    return exit_code;
}

namespace {

struct DumpRecord {
    Block block;
};

// Parses a dump line into a Block carrying the stated id (the dump is the
// authority on its own ids; linkage uses them verbatim).
Block parse_dump_line(const json& line, std::size_t line_no) {
    const auto malformed = [line_no](const std::string& msg) -> UsageError {
        return UsageError("line " + std::to_string(line_no) + ": " + msg);
    };
    if (!line.is_object()) throw malformed("not a JSON object");
    for (const char* key : {"id", "parent_id", "kind", "height", "timestamp", "difficulty",
                            "producer_id"}) {
        if (!line.contains(key)) throw malformed(std::string("missing key \"") + key + "\"");
    }
    const auto kind_name = line["kind"].get<std::string>();
    Block b;
    if (kind_name == "work") {
        b.kind = BlockKind::Work;
    } else if (kind_name == "stake") {
        b.kind = BlockKind::Stake;
    } else {
        throw malformed("kind must be \"work\" or \"stake\"");
    }
    if (line.contains("nonce") && line.contains("seed"))
        throw malformed("block carries both nonce and seed");

    const auto id = hash256_from_hex(line["id"].get<std::string>());
    const auto parent = hash256_from_hex(line["parent_id"].get<std::string>());
    if (!id || !parent) throw malformed("id and parent_id must be 64 hex digits");
    b.parent_id = *parent;
    if (!line["height"].is_number()) throw malformed("height must be a number");
    b.height = line["height"].get<std::uint64_t>();
    if (!line["timestamp"].is_number() || !line["difficulty"].is_number())
        throw malformed("timestamp and difficulty must be numbers");
    b.timestamp = line["timestamp"].get<double>();
    b.difficulty = line["difficulty"].get<double>();
    b.producer_id = line["producer_id"].get<std::string>();

    if (b.kind == BlockKind::Work) {
        if (!line.contains("nonce")) throw malformed("work block without nonce");
        const auto nonce = bytes_from_hex(line["nonce"].get<std::string>());
        if (!nonce || nonce->size() != kNonceSize) throw malformed("nonce must be 32 bytes of hex");
        b.proof = WorkProof{*nonce};
    } else {
        if (!line.contains("seed")) throw malformed("stake block without seed");
        const auto seed = hash256_from_hex(line["seed"].get<std::string>());
        if (!seed) throw malformed("seed must be 64 hex digits");
        b.proof = StakeProof{*seed};
    }
    b.id = *id;
    return b;
}

} // namespace

int cmd_verify(const fs::path& chain_dump, const fs::path& params_file, std::ostream& out) {
    ProtocolParams params;
    StakeLedger ledger;
    try {
        const json doc = load_json_file(params_file);
        if (doc.contains("T")) params.target_block_time = doc["T"].get<double>();
        if (doc.contains("alpha")) params.alpha = doc["alpha"].get<double>();
        if (doc.contains("unlock_delay"))
            params.unlock_delay = doc["unlock_delay"].get<std::uint64_t>();
        if (doc.contains("genesis_d_w")) params.genesis_d_w = doc["genesis_d_w"].get<double>();
        if (doc.contains("genesis_d_s")) params.genesis_d_s = doc["genesis_d_s"].get<double>();
        if (doc.contains("max_future_drift"))
            params.max_future_drift = doc["max_future_drift"].get<double>();
        if (doc.contains("genesis_seed_0")) {
            const auto h = hash256_from_hex(doc["genesis_seed_0"].get<std::string>());
            if (!h) throw UsageError("genesis_seed_0 must be 64 hex digits");
            params.genesis_seed_0 = *h;
        }
        if (doc.contains("genesis_seed_1")) {
            const auto h = hash256_from_hex(doc["genesis_seed_1"].get<std::string>());
            if (!h) throw UsageError("genesis_seed_1 must be 64 hex digits");
            params.genesis_seed_1 = *h;
        }
        if (doc.contains("pow_hash")) {
            const auto kind = pow_hash_from_string(doc["pow_hash"].get<std::string>());
            if (!kind) throw UsageError("pow_hash must be \"sha256\" or \"nonce_value\"");
            params.pow_hash = *kind;
        }
        if (doc.contains("stakes")) {
            for (const auto& [account, amount] : doc["stakes"].items()) {
                ledger.lock_initial(account, amount.get<Amount>());
            }
        }
        params.check();
    } catch (const std::exception& e) {
        out << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ifstream in(chain_dump);
    if (!in) {
        out << "error: cannot open " << chain_dump.string() << '\n';
        return kExitUsage;
    }

    std::unique_ptr<ChainStore> store;
    std::size_t violations = 0;
    std::string text_line;
    std::size_t line_no = 0;
    while (std::getline(in, text_line)) {
        ++line_no;
        if (text_line.empty()) continue;
        Block b;
        try {
            json parsed = json::parse(text_line, nullptr, false);
            if (parsed.is_discarded())
                throw UsageError("line " + std::to_string(line_no) + ": invalid JSON");
            b = parse_dump_line(parsed, line_no);
        } catch (const std::exception& e) {
            out << "error: " << e.what() << '\n';
            return kExitUsage;
        }

        if (store == nullptr) {
            if (b.height != 0 || b.parent_id != Hash256{}) {
                out << "error: line " << line_no << ": dump must start with the genesis block\n";
                return kExitUsage;
            }
            store = std::make_unique<ChainStore>(b);
            continue;
        }
        if (store->contains(b.id)) continue;  // duplicate line, idempotent

        // Simulated clock equal to the block's own timestamp: the future
        // check degenerates to the drift allowance.
        const auto failure = validate_block(b, *store, ledger, b.timestamp, params);
        if (failure) {
            out << b.height << ' ' << to_hex(b.id) << ' ' << to_string(failure->code) << ' '
                << failure->detail << '\n';
            ++violations;
        }
        // Store the block regardless so one fault does not cascade into
        // UnknownParent reports for every descendant.
        const Block* parent = store->find(b.parent_id);
        if (parent != nullptr && b.height == parent->height + 1) {
            store->insert_unchecked(std::move(b));
        }
    }
    if (store == nullptr) {
        out << "error: empty chain dump\n";
        return kExitUsage;
    }
    return violations == 0 ? kExitOk : kExitViolations;
}

namespace {

std::pair<double, double> sweep_headline(const ScenarioConfig& config, unsigned workers) {
    switch (config.type) {
        case ScenarioType::DoubleSpend: {
            const DoubleSpendResult res = run_double_spend(config, workers);
            const double n = static_cast<double>(std::max<std::uint64_t>(1, res.trials));
            return {res.win_rate, std::sqrt(res.win_rate * (1.0 - res.win_rate) / n)};
        }
        case ScenarioType::StakeGrinding: {
            const GrindingResult res = run_stake_grinding(config);
            const double n = static_cast<double>(std::max<std::uint64_t>(1, res.windows));
            return {res.empirical, std::sqrt(res.empirical * (1.0 - res.empirical) / n)};
        }
        case ScenarioType::Collusion: {
            const CollusionReport rep = run_collusion_headstart(config);
            std::uint64_t work_total = 0;
            for (const auto& [id, c] : rep.run.stats.by_actor) {
                (void)id;
                work_total += c.work;
            }
            const double n = static_cast<double>(std::max<std::uint64_t>(1, work_total));
            return {rep.excess_share,
                    std::sqrt(rep.work_share * (1.0 - rep.work_share) / n)};
        }
        case ScenarioType::Convergence: {
            // dispersion of the difficulty traces: mean per-kind coefficient
            // of variation
            const ChainRun run = run_steady_state(config);
            double cv = 0.0;
            int kinds = 0;
            for (const auto* trace : {&run.stats.work_difficulty, &run.stats.stake_difficulty}) {
                std::vector<double> values;
                values.reserve(trace->size());
                for (const auto& t : *trace) values.push_back(t.difficulty);
                const SummaryStats s = summarize(values);
                if (s.n > 0 && s.mean > 0.0) {
                    cv += s.std_dev / s.mean;
                    ++kinds;
                }
            }
            return {kinds ? cv / kinds : 0.0, 0.0};
        }
        case ScenarioType::SteadyState:
        case ScenarioType::Fairness:
        default: {
            const ChainRun run = run_steady_state(config);
            std::vector<double> all = run.stats.work_deltas();
            const std::vector<double> stake = run.stats.stake_deltas();
            all.insert(all.end(), stake.begin(), stake.end());
            const SummaryStats s = summarize(all);
            const double stderr_mean =
                s.n > 0 ? s.std_dev / std::sqrt(static_cast<double>(s.n)) : 0.0;
            return {s.mean, stderr_mean};
        }
    }
}

const std::map<std::string, std::string>& sweep_axes() {
    static const std::map<std::string, std::string> axes{
        {"k", "k"},
        {"l", "l"},
        {"alpha", "params.alpha"},
        {"T", "params.T"},
        {"unlock_delay", "params.unlock_delay"},
        {"max_future_drift", "params.max_future_drift"},
        {"leak_fraction", "leak_fraction"},
        {"horizon", "horizon"},
        {"trials", "trials"},
        {"x", "x"},
        {"bins", "bins"},
        {"bin_width", "bin_width"},
        {"duration_blocks", "duration_blocks"},
        {"duration_days", "duration_days"},
        {"initial_d_w", "initial_d_w"},
        {"initial_d_s", "initial_d_s"},
        {"rng_seed", "rng_seed"}};
    return axes;
}

} // namespace

int cmd_sweep(const fs::path& scenario_file, const std::string& axis,
              const std::vector<double>& values, const std::vector<std::string>& overrides,
              const fs::path& out_dir, std::ostream& out, unsigned workers) {
    const auto axis_it = sweep_axes().find(axis);
    if (axis_it == sweep_axes().end()) {
        out << "error: unknown sweep axis \"" << axis << "\"\n";
        return kExitUsage;
    }
    if (values.empty()) {
        out << "error: sweep needs at least one value\n";
        return kExitUsage;
    }

    json base_doc;
    try {
        base_doc = load_json_file(scenario_file);
        for (const std::string& o : overrides) apply_override(base_doc, o);
    } catch (const std::exception& e) {
        out << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    fs::create_directories(out_dir);
    std::ostringstream csv;
    csv << "axis_value,headline_stat,stderr\n";
    ScenarioConfig last_config;
    const auto t0 = std::chrono::steady_clock::now();
    for (const double value : values) {
        ScenarioConfig config;
        try {
            json doc = base_doc;
            apply_override(doc, axis_it->second + "=" + fmt_double(value));
            config = ScenarioConfig::from_json(doc);
        } catch (const std::exception& e) {
            out << "error: " << e.what() << '\n';
            return kExitUsage;
        }
        const auto [headline, err] = sweep_headline(config, workers);
        csv << fmt_double(value) << ',' << fmt_double(headline) << ',' << fmt_double(err) << '\n';
        last_config = config;
    }
    write_text(out_dir / "sweep.csv", csv.str());
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(out_dir, scenario_file, last_config, {"sweep.csv"}, wall);
    out << csv.str();
    return kExitOk;
}

int run_main(int argc, const char* const* argv) {
    CLI::App app{std::string(kToolVersion) +
                 " — simulator for an interleaved hybrid PoW/PoS consensus protocol"};
    app.require_subcommand(1);

    std::string scenario;
    std::string out_dir = "out";
    std::vector<std::string> overrides;
    std::uint64_t seed = 0;
    unsigned workers = 0;

    auto* run = app.add_subcommand("run", "Run a scenario file and write result artifacts");
    run->add_option("scenario", scenario, "scenario JSON file")->required();
    run->add_option("-o,--out", out_dir, "output directory (default: out)");
    auto* run_seed = run->add_option("--seed", seed, "override the scenario rng_seed");
    run->add_option("--override", overrides,
                    "key=value override, repeatable; dotted paths reach into the scenario "
                    "document (e.g. params.alpha=0.05). Overrides beat scenario values, "
                    "which beat built-in defaults.");
    run->add_option("--workers", workers,
                    "parallel trial workers (default: cores; UNITY_SIM_WORKERS wins)");

    std::string dump_path;
    std::string params_path;
    auto* verify = app.add_subcommand("verify", "Validate every block of a chain dump");
    verify->add_option("chain_dump", dump_path, "chain dump (JSON lines)")->required();
    verify->add_option("params", params_path, "protocol params + stakes JSON")->required();

    std::string axis;
    std::vector<double> values;
    auto* sweep = app.add_subcommand("sweep", "Run a scenario across a parameter axis");
    sweep->add_option("scenario", scenario, "scenario JSON file")->required();
    sweep->add_option("--axis", axis, "parameter to sweep (k, l, alpha, ...)")->required();
    sweep->add_option("--values", values, "axis values")->required()->expected(-1);
    sweep->add_option("-o,--out", out_dir, "output directory (default: out)");
    auto* sweep_seed = sweep->add_option("--seed", seed, "override the scenario rng_seed");
    sweep->add_option("--override", overrides, "key=value override, repeatable");
    sweep->add_option("--workers", workers, "parallel trial workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const unsigned n_workers = resolve_workers(workers);
    if (run->parsed()) {
        if (run_seed->count() > 0) overrides.push_back("rng_seed=" + std::to_string(seed));
        return cmd_run(scenario, overrides, out_dir, std::cout, n_workers);
    }
    if (verify->parsed()) {
        return cmd_verify(dump_path, params_path, std::cout);
    }
    if (sweep->parsed()) {
        if (sweep_seed->count() > 0) overrides.push_back("rng_seed=" + std::to_string(seed));
        return cmd_sweep(scenario, axis, values, overrides, out_dir, std::cout, n_workers);
    }
    return kExitUsage;
}

} // namespace unity::cli
