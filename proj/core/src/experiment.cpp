// SPDX-License-Identifier: Apache-2.0
#include "mlpide/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace mlpide {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw config_error("config key '" + key + "': cannot parse number from '" + value + "'");
    }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw config_error("config key '" + key + "': cannot parse integer from '" + value + "'");
    }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw config_error("config key '" + key + "': cannot parse unsigned integer from '" +
                           value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "on" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "off" || value == "no") {
        return false;
    }
    throw config_error("config key '" + key + "': expected a boolean, got '" + value + "'");
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) {
            out.push_back(tok);
        }
    }
    return out;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json config_json(const ExperimentConfig& cfg) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& [n, M] : cfg.levels) {
        levels.push_back({{"n", n}, {"M", M}});
    }
    return nlohmann::json{
        {"problem", cfg.problem},
        {"t", cfg.t},
        {"x0", cfg.params.x0},
        {"dims", cfg.dims},
        {"levels", levels},
        {"steps", cfg.euler.steps},
        {"delta", cfg.euler.delta},
        {"mc_comp", cfg.euler.mc_comp},
        {"runs", cfg.runs},
        {"seed", cfg.seed},
        {"threads", cfg.threads},
        {"timing", cfg.timing},
        {"params",
         {{"alpha", cfg.params.alpha},
          {"mu0", cfg.params.mu0},
          {"sigma0", cfg.params.sigma0},
          {"lambda", cfg.params.lambda},
          {"beta", cfg.params.beta},
          {"K1", cfg.params.K1},
          {"K2", cfg.params.K2},
          {"L0", cfg.params.L0},
          {"T", cfg.params.T}}},
    };
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    for (const auto& tok : split_commas(text)) {
        out.push_back(parse_int("dim", tok));
    }
    if (out.empty()) {
        throw config_error("expected a comma-separated integer list, got '" + text + "'");
    }
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_levels(const std::string& text) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& tok : split_commas(text)) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) {
            const std::int64_t k = parse_int("levels", tok);
            out.emplace_back(k, k);
        } else {
            out.emplace_back(parse_int("levels", trim(tok.substr(0, colon))),
                             parse_int("levels", trim(tok.substr(colon + 1))));
        }
    }
    if (out.empty()) {
        throw config_error("expected level tokens 'k' or 'n:M', got '" + text + "'");
    }
    return out;
}

ExperimentConfig parse_config_text(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error("config line " + std::to_string(lineno) +
                               ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw config_error("config line " + std::to_string(lineno) + ": empty key or value");
        }

        if (key == "problem") {
            cfg.problem = value;
        } else if (key == "t") {
            cfg.t = parse_double(key, value);
        } else if (key == "x0") {
            cfg.params.x0 = parse_double(key, value);
        } else if (key == "x") {
            cfg.x.clear();
            for (const auto& tok : split_commas(value)) {
                cfg.x.push_back(parse_double(key, tok));
            }
        } else if (key == "dim" || key == "dims") {
            cfg.dims = parse_int_list(value);
        } else if (key == "levels") {
            cfg.levels = parse_levels(value);
        } else if (key == "steps") {
            cfg.euler.steps = parse_int(key, value);
        } else if (key == "delta") {
            cfg.euler.delta = parse_double(key, value);
        } else if (key == "mc_comp" || key == "mc-comp") {
            cfg.euler.mc_comp = parse_int(key, value);
        } else if (key == "runs") {
            cfg.runs = parse_int(key, value);
        } else if (key == "seed") {
            cfg.seed = parse_uint(key, value);
        } else if (key == "threads") {
            cfg.threads = static_cast<int>(parse_int(key, value));
        } else if (key == "timing") {
            cfg.timing = parse_bool(key, value);
        } else if (key == "out") {
            cfg.out = value;
        } else if (key == "format") {
            cfg.format = value;
        } else if (key == "alpha") {
            cfg.params.alpha = parse_double(key, value);
        } else if (key == "mu0") {
            cfg.params.mu0 = parse_double(key, value);
        } else if (key == "sigma0") {
            cfg.params.sigma0 = parse_double(key, value);
        } else if (key == "lambda") {
            cfg.params.lambda = parse_double(key, value);
        } else if (key == "beta") {
            cfg.params.beta = parse_double(key, value);
        } else if (key == "K1" || key == "k1") {
            cfg.params.K1 = parse_double(key, value);
        } else if (key == "K2" || key == "k2") {
            cfg.params.K2 = parse_double(key, value);
        } else if (key == "L0" || key == "l0") {
            cfg.params.L0 = parse_double(key, value);
        } else if (key == "T" || key == "horizon") {
            cfg.params.T = parse_double(key, value);
        } else {
            throw config_error("config line " + std::to_string(lineno) + ": unknown key '" + key +
                               "'");
        }
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open config file '" + path + "'");
    }
    return parse_config_text(in);
}

void ExperimentConfig::validate() const {
    if (problem != "vasicek-jump" && problem != "linear-probe") {
        throw config_error("problem must be 'vasicek-jump' or 'linear-probe', got '" + problem +
                           "'");
    }
    if (format != "csv" && format != "json") {
        throw config_error("format must be 'csv' or 'json', got '" + format + "'");
    }
    if (runs < 1) {
        throw config_error("runs must be positive, got " + std::to_string(runs));
    }
    if (threads < 1) {
        throw config_error("threads must be positive, got " + std::to_string(threads));
    }
    if (dims.empty()) {
        throw config_error("dimension grid must be nonempty");
    }
    for (const std::int64_t d : dims) {
        if (d < 1) {
            throw config_error("dimensions must be positive, got " + std::to_string(d));
        }
        if (!x.empty() && static_cast<std::int64_t>(x.size()) != d) {
            throw config_error("explicit x has length " + std::to_string(x.size()) +
                               " but the dimension grid contains " + std::to_string(d) +
                               "; drop x to broadcast x0");
        }
    }
    if (levels.empty()) {
        throw config_error("level grid must be nonempty");
    }
    if (!(t >= 0.0 && t <= params.T)) {
        throw config_error("t must lie in [0, T]");
    }
    try {
        for (const auto& [n, M] : levels) {
            MLPConfig mc{n, M, euler};
            mc.validate();
        }
        VasicekJumpParams p = params;
        p.d = dims.front();
        p.validate();
    } catch (const std::exception& e) {
        throw config_error(e.what());
    }
}

std::vector<GridCell> run_grid(const ExperimentConfig& cfg, std::ostream* warnings) {
    cfg.validate();
    std::vector<GridCell> cells;
    cells.reserve(cfg.dims.size() * cfg.levels.size());
    for (const std::int64_t d : cfg.dims) {
        VasicekJumpParams p = cfg.params;
        p.d = d;
        const PIDEProblem problem = make_problem(cfg.problem, p);
        const std::vector<double> x =
            cfg.x.empty() ? std::vector<double>(static_cast<std::size_t>(d), p.x0) : cfg.x;
        for (const auto& [n, M] : cfg.levels) {
            if (warnings != nullptr &&
                !cfg.euler.meets_compensator_resolution(problem.constants.K, problem.constants.p,
                                                        d)) {
                *warnings << "warning: mc_comp = " << cfg.euler.mc_comp
                          << " is below the resolution bound delta^-2 K d^p = "
                          << fmt17(problem.constants.K *
                                   std::pow(static_cast<double>(d), problem.constants.p) /
                                   (cfg.euler.delta * cfg.euler.delta))
                          << " at d = " << d << "\n";
            }
            const std::uint64_t cell_seed =
                StreamKey(cfg.seed).child(d).child(n).child(M).derived_seed();
            const MLPConfig mc{n, M, cfg.euler};
            GridCell cell;
            cell.d = d;
            cell.n = n;
            cell.M = M;
            cell.stats = run_experiment(problem, mc, cfg.t, x, cfg.runs, cell_seed, cfg.threads);
            if (!cfg.timing) {
                cell.stats.avg_time_s = 0.0;
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

void write_csv(std::ostream& os, const ExperimentConfig& cfg, const std::vector<GridCell>& cells) {
    os << "d,n,M,N,delta,mc_comp,runs,avg_sol,std_dev,avg_time_s,avg_evals\n";
    for (const GridCell& c : cells) {
        os << c.d << ',' << c.n << ',' << c.M << ',' << cfg.euler.steps << ','
           << fmt17(cfg.euler.delta) << ',' << cfg.euler.mc_comp << ',' << cfg.runs << ','
           << fmt17(c.stats.avg_sol) << ',' << fmt17(c.stats.std_dev) << ','
           << fmt17(c.stats.avg_time_s) << ',' << fmt17(c.stats.avg_evals) << '\n';
    }
}

void write_json(std::ostream& os, const ExperimentConfig& cfg, const std::vector<GridCell>& cells) {
    nlohmann::json j;
    j["config"] = config_json(cfg);
    j["cells"] = nlohmann::json::array();
    for (const GridCell& c : cells) {
        j["cells"].push_back({{"d", c.d},
                              {"n", c.n},
                              {"M", c.M},
                              {"N", cfg.euler.steps},
                              {"delta", cfg.euler.delta},
                              {"mc_comp", cfg.euler.mc_comp},
                              {"runs", cfg.runs},
                              {"avg_sol", c.stats.avg_sol},
                              {"std_dev", c.stats.std_dev},
                              {"avg_time_s", c.stats.avg_time_s},
                              {"avg_evals", c.stats.avg_evals}});
    }
    os << j.dump(2) << '\n';
}

void write_output(const ExperimentConfig& cfg, const std::vector<GridCell>& cells) {
    const auto emit = [&](std::ostream& os) {
        if (cfg.format == "json") {
            write_json(os, cfg, cells);
        } else {
            write_csv(os, cfg, cells);
        }
    };
    if (cfg.out == "-") {
        emit(std::cout);
        return;
    }
    std::ofstream file(cfg.out);
    if (!file) {
        throw config_error("cannot open output file '" + cfg.out + "'");
    }
    emit(file);
}

}  // namespace mlpide
