#include "avrfopid/run_config.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "avrfopid/errors.hpp"

namespace avrfopid {

using nlohmann::json;

std::string to_string(LoopTopology t) {
    return t == LoopTopology::SensorInFeedback ? "sensor_in_feedback" : "literal_eq5";
}

LoopTopology topology_from_string(const std::string& s) {
    if (s == "sensor_in_feedback") return LoopTopology::SensorInFeedback;
    if (s == "literal_eq5") return LoopTopology::LiteralUnityFeedback;
    throw ConfigError("unknown topology: " + s);
}

void RunConfig::validate() const {
    nsga2.validate();
    if (!plant.valid()) throw ConfigError("plant: gains and time constants must be positive");
    if (!oustaloup.valid()) throw ConfigError("oustaloup: need order >= 1 and 0 < wb < wh");
    if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

namespace {

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
    for (const auto& [key, _] : j.items())
        if (!known.count(key)) throw ConfigError("unknown config key '" + where + key + "'");
}

double num(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ConfigError(std::string("config key '") + key + "' must be a number");
    return j[key].get<double>();
}

int integer(const json& j, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) throw ConfigError(std::string("config key '") + key + "' must be an integer");
    return j[key].get<int>();
}

}  // namespace

RunConfig run_config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    reject_unknown(j, {"controller", "plant", "nsga2", "margins", "topology", "oustaloup", "output_dir"}, "");

    RunConfig cfg;
    if (j.contains("controller")) cfg.nsga2.kind = genome_kind_from_string(j["controller"].get<std::string>());
    if (j.contains("topology")) cfg.nsga2.topology = topology_from_string(j["topology"].get<std::string>());
    if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();

    if (j.contains("plant")) {
        const json& p = j["plant"];
        reject_unknown(p, {"ka", "tau_a", "ke", "tau_e", "kg", "tau_g", "ks", "tau_s"}, "plant.");
        cfg.plant.ka = num(p, "ka", cfg.plant.ka);
        cfg.plant.tau_a = num(p, "tau_a", cfg.plant.tau_a);
        cfg.plant.ke = num(p, "ke", cfg.plant.ke);
        cfg.plant.tau_e = num(p, "tau_e", cfg.plant.tau_e);
        cfg.plant.kg = num(p, "kg", cfg.plant.kg);
        cfg.plant.tau_g = num(p, "tau_g", cfg.plant.tau_g);
        cfg.plant.ks = num(p, "ks", cfg.plant.ks);
        cfg.plant.tau_s = num(p, "tau_s", cfg.plant.tau_s);
    }
    if (j.contains("nsga2")) {
        const json& n = j["nsga2"];
        reject_unknown(n,
                       {"pop_size", "generations", "elite_count", "crossover_fraction",
                        "mutation_sigma", "pareto_fraction", "source", "seed", "penalty",
                        "normalized_crowding", "serial_eval", "bounds"},
                       "nsga2.");
        cfg.nsga2.pop_size = integer(n, "pop_size", cfg.nsga2.pop_size);
        cfg.nsga2.generations = integer(n, "generations", cfg.nsga2.generations);
        cfg.nsga2.elite_count = integer(n, "elite_count", cfg.nsga2.elite_count);
        cfg.nsga2.crossover_fraction = num(n, "crossover_fraction", cfg.nsga2.crossover_fraction);
        cfg.nsga2.mutation_sigma = num(n, "mutation_sigma", cfg.nsga2.mutation_sigma);
        cfg.nsga2.pareto_fraction = num(n, "pareto_fraction", cfg.nsga2.pareto_fraction);
        if (n.contains("source")) cfg.nsga2.source = source_kind_from_string(n["source"].get<std::string>());
        if (n.contains("seed")) cfg.nsga2.seed = n["seed"].get<std::uint64_t>();
        cfg.nsga2.penalty = num(n, "penalty", cfg.nsga2.penalty);
        if (n.contains("normalized_crowding")) cfg.nsga2.normalized_crowding = n["normalized_crowding"].get<bool>();
        if (n.contains("serial_eval") && n["serial_eval"].get<bool>()) cfg.nsga2.eval_mode = EvalMode::Serial;
        if (n.contains("bounds")) {
            cfg.nsga2.bounds.clear();
            for (const auto& pair : n["bounds"]) {
                if (!pair.is_array() || pair.size() != 2) throw ConfigError("nsga2.bounds entries must be [lo, hi]");
                cfg.nsga2.bounds.push_back({pair[0].get<double>(), pair[1].get<double>()});
            }
        }
    }
    if (j.contains("margins")) {
        const json& m = j["margins"];
        reject_unknown(m, {"wmin", "wmax", "grid_points"}, "margins.");
        cfg.nsga2.margins.wmin = num(m, "wmin", cfg.nsga2.margins.wmin);
        cfg.nsga2.margins.wmax = num(m, "wmax", cfg.nsga2.margins.wmax);
        cfg.nsga2.margins.grid_points = integer(m, "grid_points", cfg.nsga2.margins.grid_points);
    }
    if (j.contains("oustaloup")) {
        const json& o = j["oustaloup"];
        reject_unknown(o, {"order", "wb", "wh"}, "oustaloup.");
        cfg.oustaloup.order = integer(o, "order", cfg.oustaloup.order);
        cfg.oustaloup.wb = num(o, "wb", cfg.oustaloup.wb);
        cfg.oustaloup.wh = num(o, "wh", cfg.oustaloup.wh);
    }
    cfg.validate();
    return cfg;
}

RunConfig run_config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return run_config_from_json_text(text);
}

std::string run_config_to_json_text(const RunConfig& cfg) {
    json j;
    j["controller"] = to_string(cfg.nsga2.kind);
    j["topology"] = to_string(cfg.nsga2.topology);
    j["output_dir"] = cfg.output_dir;
    j["plant"] = {{"ka", cfg.plant.ka},   {"tau_a", cfg.plant.tau_a}, {"ke", cfg.plant.ke},
                  {"tau_e", cfg.plant.tau_e}, {"kg", cfg.plant.kg},   {"tau_g", cfg.plant.tau_g},
                  {"ks", cfg.plant.ks},   {"tau_s", cfg.plant.tau_s}};
    json n;
    n["pop_size"] = cfg.nsga2.pop_size;
    n["generations"] = cfg.nsga2.generations;
    n["elite_count"] = cfg.nsga2.elite_count;
    n["crossover_fraction"] = cfg.nsga2.crossover_fraction;
    n["mutation_sigma"] = cfg.nsga2.mutation_sigma;
    n["pareto_fraction"] = cfg.nsga2.pareto_fraction;
    n["source"] = to_string(cfg.nsga2.source);
    n["seed"] = cfg.nsga2.seed;
    n["penalty"] = cfg.nsga2.penalty;
    n["normalized_crowding"] = cfg.nsga2.normalized_crowding;
    n["serial_eval"] = cfg.nsga2.eval_mode == EvalMode::Serial;
    if (!cfg.nsga2.bounds.empty()) {
        json b = json::array();
        for (const auto& gb : cfg.nsga2.bounds) b.push_back({gb.lo, gb.hi});
        n["bounds"] = b;
    }
    j["nsga2"] = n;
    j["margins"] = {{"wmin", cfg.nsga2.margins.wmin},
                    {"wmax", cfg.nsga2.margins.wmax},
                    {"grid_points", cfg.nsga2.margins.grid_points}};
    j["oustaloup"] = {{"order", cfg.oustaloup.order}, {"wb", cfg.oustaloup.wb}, {"wh", cfg.oustaloup.wh}};
    return j.dump(2);
}

}  // namespace avrfopid
