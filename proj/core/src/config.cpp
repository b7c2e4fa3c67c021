#include "roomest/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "roomest/errors.hpp"

namespace roomest {

namespace {

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + v + "' as number");
    }
}

int parse_int(const std::string& key, const std::string& v) {
    const double d = parse_double(key, v);
    const int i = static_cast<int>(d);
    if (static_cast<double>(i) != d) throw ConfigError("key '" + key + "': expected integer, got '" + v + "'");
    return i;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const std::uint64_t u = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return u;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + v + "' as unsigned integer");
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("key '" + key + "': expected boolean, got '" + v + "'");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

void RunConfig::validate() const {
    if (threads < 1) throw ConfigError("threads must be >= 1");
    if (sim.max_order < 0) throw ConfigError("max_order must be >= 0");
    if (sim.n_rays <= 0) throw ConfigError("n_rays must be > 0");
    if (sim.rir_cap_s <= 0.0) throw ConfigError("rir_cap_s must be > 0");
    if (sim.rain_receiver_radius <= 0.0) throw ConfigError("rain_receiver_radius must be > 0");
    if (dataset.rooms < 1) throw ConfigError("rooms must be >= 1");
    if (dataset.positions < 1) throw ConfigError("positions must be >= 1");
    if (dataset.mix_seconds <= 0.0) throw ConfigError("mix_seconds must be > 0");
    if (!(dataset.snr_static_lo <= dataset.snr_static_hi))
        throw ConfigError("snr_static range inverted");
    if (!(dataset.snr_diffuse_lo <= dataset.snr_diffuse_hi))
        throw ConfigError("snr_diffuse range inverted");
    if (!(dataset.train_fraction > 0.0 && dataset.val_fraction >= 0.0 &&
          dataset.train_fraction + dataset.val_fraction < 1.0))
        throw ConfigError("split fractions must satisfy train > 0, val >= 0, train+val < 1");
    if (train.conv_channels < 1 || train.conv_hidden < 1) throw ConfigError("conv widths must be >= 1");
    if (train.kernel < 1 || train.kernel % 2 == 0) throw ConfigError("kernel must be odd and >= 1");
    if (train.batch_size < 1) throw ConfigError("batch_size must be >= 1");
    if (train.patience < 1) throw ConfigError("patience must be >= 1");
    if (train.var_floor <= 0.0) throw ConfigError("var_floor must be > 0");
    absorption.validate();
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    using Setter = std::function<void(RunConfig&, const std::string&)>;
    static const std::map<std::string, Setter> setters = {
        {"master_seed", [](RunConfig& c, const std::string& v) { c.master_seed = parse_u64("master_seed", v); }},
        {"threads", [](RunConfig& c, const std::string& v) { c.threads = parse_int("threads", v); }},
        {"max_order", [](RunConfig& c, const std::string& v) { c.sim.max_order = parse_int("max_order", v); }},
        {"n_rays", [](RunConfig& c, const std::string& v) { c.sim.n_rays = parse_int("n_rays", v); }},
        {"rir_cap_s", [](RunConfig& c, const std::string& v) { c.sim.rir_cap_s = parse_double("rir_cap_s", v); }},
        {"rain_receiver_radius", [](RunConfig& c, const std::string& v) { c.sim.rain_receiver_radius = parse_double("rain_receiver_radius", v); }},
        {"rooms", [](RunConfig& c, const std::string& v) { c.dataset.rooms = parse_int("rooms", v); }},
        {"positions", [](RunConfig& c, const std::string& v) { c.dataset.positions = parse_int("positions", v); }},
        {"corpus_dir", [](RunConfig& c, const std::string& v) { c.dataset.corpus_dir = v; c.dataset.synthetic_speech = v.empty(); }},
        {"synthetic_speech", [](RunConfig& c, const std::string& v) { c.dataset.synthetic_speech = parse_bool("synthetic_speech", v); }},
        {"snr_static_min", [](RunConfig& c, const std::string& v) { c.dataset.snr_static_lo = parse_double("snr_static_min", v); }},
        {"snr_static_max", [](RunConfig& c, const std::string& v) { c.dataset.snr_static_hi = parse_double("snr_static_max", v); }},
        {"snr_diffuse_min", [](RunConfig& c, const std::string& v) { c.dataset.snr_diffuse_lo = parse_double("snr_diffuse_min", v); }},
        {"snr_diffuse_max", [](RunConfig& c, const std::string& v) { c.dataset.snr_diffuse_hi = parse_double("snr_diffuse_max", v); }},
        {"train_fraction", [](RunConfig& c, const std::string& v) { c.dataset.train_fraction = parse_double("train_fraction", v); }},
        {"val_fraction", [](RunConfig& c, const std::string& v) { c.dataset.val_fraction = parse_double("val_fraction", v); }},
        {"absorbent_min", [](RunConfig& c, const std::string& v) { c.absorption.absorbent_lo = parse_double("absorbent_min", v); }},
        {"absorbent_max", [](RunConfig& c, const std::string& v) { c.absorption.absorbent_hi = parse_double("absorbent_max", v); }},
        {"reflective_prob", [](RunConfig& c, const std::string& v) { c.absorption.reflective_prob = parse_double("reflective_prob", v); }},
        {"reflective_threshold", [](RunConfig& c, const std::string& v) { c.absorption.reflective_threshold = parse_double("reflective_threshold", v); }},
        {"conv_channels", [](RunConfig& c, const std::string& v) { c.train.conv_channels = parse_int("conv_channels", v); }},
        {"conv_hidden", [](RunConfig& c, const std::string& v) { c.train.conv_hidden = parse_int("conv_hidden", v); }},
        {"kernel", [](RunConfig& c, const std::string& v) { c.train.kernel = parse_int("kernel", v); }},
        {"sc_pool_bins", [](RunConfig& c, const std::string& v) { c.train.sc_pool_bins = parse_int("sc_pool_bins", v); }},
        {"ic_pool_bins", [](RunConfig& c, const std::string& v) { c.train.ic_pool_bins = parse_int("ic_pool_bins", v); }},
        {"use_ic", [](RunConfig& c, const std::string& v) { c.train.use_ic = parse_bool("use_ic", v); }},
        {"dropout_conv", [](RunConfig& c, const std::string& v) { c.train.dropout_conv = parse_double("dropout_conv", v); }},
        {"dropout_dense", [](RunConfig& c, const std::string& v) { c.train.dropout_dense = parse_double("dropout_dense", v); }},
        {"lr", [](RunConfig& c, const std::string& v) { c.train.lr = parse_double("lr", v); }},
        {"batch_size", [](RunConfig& c, const std::string& v) { c.train.batch_size = parse_int("batch_size", v); }},
        {"max_epochs", [](RunConfig& c, const std::string& v) { c.train.max_epochs = parse_int("max_epochs", v); }},
        {"patience", [](RunConfig& c, const std::string& v) { c.train.patience = parse_int("patience", v); }},
    };
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown key '" + key + "'");
    it->second(cfg, value);
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config: " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            apply_config_entry(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

}  // namespace roomest
