// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "unity/sim/scenario.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace unity::sim {

using nlohmann::json;

std::string_view to_string(Behavior b) {
    switch (b) {
        case Behavior::Honest: return "honest";
        case Behavior::DoubleSpender: return "double_spender";
        case Behavior::StakeGrinder: return "stake_grinder";
        case Behavior::ColludingPair: return "colluding_pair";
    }
    return "honest";
}

std::optional<Behavior> behavior_from_string(std::string_view name) {
    for (const auto b : {Behavior::Honest, Behavior::DoubleSpender, Behavior::StakeGrinder,
                         Behavior::ColludingPair}) {
        if (name == to_string(b)) return b;
    }
    return std::nullopt;
}

std::string_view to_string(ScenarioType t) {
    switch (t) {
        case ScenarioType::SteadyState: return "steady_state";
        case ScenarioType::Fairness: return "fairness";
        case ScenarioType::DoubleSpend: return "double_spend";
        case ScenarioType::StakeGrinding: return "stake_grinding";
        case ScenarioType::Collusion: return "collusion";
        case ScenarioType::Convergence: return "convergence";
    }
    return "steady_state";
}

std::optional<ScenarioType> scenario_type_from_string(std::string_view name) {
    for (const auto t : {ScenarioType::SteadyState, ScenarioType::Fairness,
                         ScenarioType::DoubleSpend, ScenarioType::StakeGrinding,
                         ScenarioType::Collusion, ScenarioType::Convergence}) {
        if (name == to_string(t)) return t;
    }
    return std::nullopt;
}

double ScenarioConfig::total_hash_rate() const {
    double h = 0.0;
    for (const auto& a : actors) h += a.hash_rate;
    return h;
}

std::uint64_t ScenarioConfig::total_stake() const {
    std::uint64_t v = 0;
    for (const auto& a : actors) v += a.stake;
    return v;
}

double ScenarioConfig::duration_seconds() const {
    return duration_days ? *duration_days * 86400.0 : 0.0;
}

void ScenarioConfig::resolve() {
    if (actors.empty()) throw std::invalid_argument("scenario needs at least one actor");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!duration_days && !duration_blocks)
        duration_blocks = 10000;  // sensible default for library use
    if (duration_days && !(*duration_days > 0.0))
        throw std::invalid_argument("duration_days must be > 0");
    if (duration_blocks && *duration_blocks == 0)
        throw std::invalid_argument("duration_blocks must be > 0");
    if (leak_fraction < 0.0 || leak_fraction > 1.0)
        throw std::invalid_argument("leak_fraction must be in [0, 1]");
    if (k < 0.0 || l < 0.0) throw std::invalid_argument("k and l must be >= 0");

    std::set<std::string> ids;
    for (const auto& a : actors) {
        if (a.id.empty()) throw std::invalid_argument("actor id must be non-empty");
        if (!ids.insert(a.id).second)
            throw std::invalid_argument("duplicate actor id: " + a.id);
        if (a.hash_rate < 0.0) throw std::invalid_argument("hash_rate must be >= 0");
    }

    // Steady-state initial difficulties unless the scenario pins its own.
    // A double_spender actor is not part of the honest network, so its
    // resources do not enter the steady-state relation.
    double hash_total = 0.0;
    std::uint64_t stake_total = 0;
    for (const auto& a : actors) {
        if (a.behavior == Behavior::DoubleSpender) continue;
        hash_total += a.hash_rate;
        stake_total += a.stake;
    }
    const double T = params.target_block_time;
    if (initial_d_w) {
        params.genesis_d_w = *initial_d_w;
    } else if (hash_total > 0.0) {
        params.genesis_d_w = std::max(1.0, hash_total * T);
    }
    if (initial_d_s) {
        params.genesis_d_s = *initial_d_s;
    } else if (stake_total > 0) {
        params.genesis_d_s = std::max(1.0, static_cast<double>(stake_total) * T);
    }
    params.check();
}

namespace {

[[noreturn]] void schema_error(const std::string& msg) {
    throw std::invalid_argument("scenario schema: " + msg);
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key)) schema_error("unknown key \"" + key + "\" in " + where);
    }
}

double require_number(const json& obj, const std::string& key) {
    if (!obj.contains(key) || !obj[key].is_number()) schema_error("\"" + key + "\" must be a number");
    return obj[key].get<double>();
}

} // namespace

ScenarioConfig ScenarioConfig::from_json(const json& doc) {
    if (!doc.is_object()) schema_error("top level must be an object");
    check_keys(doc,
               {"type", "comment", "params", "actors", "duration_days", "duration_blocks",
                "trials", "rng_seed", "k", "l", "horizon", "leak_fraction", "x", "bins",
                "bin_width", "initial_d_w", "initial_d_s", "analytic_sidechain_difficulty"},
               "scenario");

    ScenarioConfig c;
    if (!doc.contains("type") || !doc["type"].is_string()) schema_error("missing \"type\"");
    const auto type = scenario_type_from_string(doc["type"].get<std::string>());
    if (!type) schema_error("unknown scenario type \"" + doc["type"].get<std::string>() + "\"");
    c.type = *type;

    if (doc.contains("params")) {
        const json& p = doc["params"];
        if (!p.is_object()) schema_error("\"params\" must be an object");
        check_keys(p,
                   {"T", "alpha", "unlock_delay", "genesis_d_w", "genesis_d_s", "max_future_drift",
                    "genesis_seed_0", "genesis_seed_1", "pow_hash"},
                   "params");
        if (p.contains("T")) c.params.target_block_time = require_number(p, "T");
        if (p.contains("alpha")) c.params.alpha = require_number(p, "alpha");
        if (p.contains("unlock_delay"))
            c.params.unlock_delay = static_cast<std::uint64_t>(require_number(p, "unlock_delay"));
        if (p.contains("genesis_d_w")) c.params.genesis_d_w = require_number(p, "genesis_d_w");
        if (p.contains("genesis_d_s")) c.params.genesis_d_s = require_number(p, "genesis_d_s");
        if (p.contains("max_future_drift"))
            c.params.max_future_drift = require_number(p, "max_future_drift");
        for (const auto& [key, member] : {std::pair{"genesis_seed_0", &c.params.genesis_seed_0},
                                          std::pair{"genesis_seed_1", &c.params.genesis_seed_1}}) {
            if (!p.contains(key)) continue;
            if (!p[key].is_string()) schema_error(std::string(key) + " must be a hex string");
            const auto h = hash256_from_hex(p[key].get<std::string>());
            if (!h) schema_error(std::string(key) + " must be 64 hex digits");
            *member = *h;
        }
        if (p.contains("pow_hash")) {
            if (!p["pow_hash"].is_string()) schema_error("pow_hash must be a string");
            const auto kind = pow_hash_from_string(p["pow_hash"].get<std::string>());
            if (!kind) schema_error("pow_hash must be \"sha256\" or \"nonce_value\"");
            c.params.pow_hash = *kind;
        }
    }
    // Simulated chains need mintable PoW solutions unless explicitly
    // overridden; protocol-faithful sha256 stays the library default.
    if (!doc.contains("params") || !doc["params"].contains("pow_hash"))
        c.params.pow_hash = PowHashKind::NonceValue;

    if (!doc.contains("actors") || !doc["actors"].is_array() || doc["actors"].empty())
        schema_error("\"actors\" must be a non-empty array");
    for (const json& a : doc["actors"]) {
        if (!a.is_object()) schema_error("actor entries must be objects");
        check_keys(a, {"id", "hash_rate", "stake", "behavior"}, "actor");
        ActorSpec spec;
        if (!a.contains("id") || !a["id"].is_string()) schema_error("actor \"id\" must be a string");
        spec.id = a["id"].get<std::string>();
        if (a.contains("hash_rate")) spec.hash_rate = require_number(a, "hash_rate");
        if (a.contains("stake")) {
            const double v = require_number(a, "stake");
            if (v < 0.0) schema_error("stake must be >= 0");
            spec.stake = static_cast<std::uint64_t>(std::llround(v));
        }
        if (a.contains("behavior")) {
            if (!a["behavior"].is_string()) schema_error("behavior must be a string");
            const auto b = behavior_from_string(a["behavior"].get<std::string>());
            if (!b) schema_error("unknown behavior \"" + a["behavior"].get<std::string>() + "\"");
            spec.behavior = *b;
        }
        c.actors.push_back(std::move(spec));
    }

    if (doc.contains("duration_days")) c.duration_days = require_number(doc, "duration_days");
    if (doc.contains("duration_blocks"))
        c.duration_blocks = static_cast<std::uint64_t>(require_number(doc, "duration_blocks"));
    if (doc.contains("trials")) c.trials = static_cast<std::uint64_t>(require_number(doc, "trials"));
    if (doc.contains("rng_seed"))
        c.rng_seed = static_cast<std::uint64_t>(require_number(doc, "rng_seed"));
    if (doc.contains("k")) c.k = require_number(doc, "k");
    if (doc.contains("l")) c.l = require_number(doc, "l");
    if (doc.contains("horizon"))
        c.horizon = static_cast<std::uint64_t>(require_number(doc, "horizon"));
    if (doc.contains("leak_fraction")) c.leak_fraction = require_number(doc, "leak_fraction");
    if (doc.contains("x")) c.x = static_cast<std::uint64_t>(require_number(doc, "x"));
    if (doc.contains("bins")) c.bins = static_cast<std::size_t>(require_number(doc, "bins"));
    if (doc.contains("bin_width")) c.bin_width = require_number(doc, "bin_width");
    if (doc.contains("initial_d_w")) c.initial_d_w = require_number(doc, "initial_d_w");
    if (doc.contains("initial_d_s")) c.initial_d_s = require_number(doc, "initial_d_s");
    if (doc.contains("analytic_sidechain_difficulty")) {
        if (!doc["analytic_sidechain_difficulty"].is_boolean())
            schema_error("analytic_sidechain_difficulty must be a boolean");
        c.analytic_sidechain_difficulty = doc["analytic_sidechain_difficulty"].get<bool>();
    }

    c.resolve();
    return c;
}

json ScenarioConfig::to_json() const {
    json actors_json = json::array();
    for (const auto& a : actors) {
        actors_json.push_back({{"id", a.id},
                               {"hash_rate", a.hash_rate},
                               {"stake", a.stake},
                               {"behavior", std::string(to_string(a.behavior))}});
    }
    json doc{{"type", std::string(to_string(type))},
             {"params",
              {{"T", params.target_block_time},
               {"alpha", params.alpha},
               {"unlock_delay", params.unlock_delay},
               {"genesis_d_w", params.genesis_d_w},
               {"genesis_d_s", params.genesis_d_s},
               {"max_future_drift", params.max_future_drift},
               {"genesis_seed_0", to_hex(params.genesis_seed_0)},
               {"genesis_seed_1", to_hex(params.genesis_seed_1)},
               {"pow_hash", std::string(to_string(params.pow_hash))}}},
             {"actors", actors_json},
             {"trials", trials},
             {"rng_seed", rng_seed},
             {"k", k},
             {"l", l},
             {"horizon", horizon},
             {"leak_fraction", leak_fraction},
             {"x", x},
             {"bins", bins},
             {"bin_width", bin_width},
             {"analytic_sidechain_difficulty", analytic_sidechain_difficulty}};
    if (duration_days) doc["duration_days"] = *duration_days;
    if (duration_blocks) doc["duration_blocks"] = *duration_blocks;
    if (initial_d_w) doc["initial_d_w"] = *initial_d_w;
    if (initial_d_s) doc["initial_d_s"] = *initial_d_s;
    return doc;
}

std::vector<double> ChainStats::work_deltas() const {
    std::vector<double> out;
    out.reserve(work_blocks.size());
    for (const auto& b : work_blocks) out.push_back(b.delta);
    return out;
}

std::vector<double> ChainStats::stake_deltas() const {
    std::vector<double> out;
    out.reserve(stake_blocks.size());
    for (const auto& b : stake_blocks) out.push_back(b.delta);
    return out;
}

} // namespace unity::sim
