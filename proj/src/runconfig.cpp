#include "mhdlab/runconfig.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mhdlab/errors.hpp"

namespace mhdlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ParseError("config: invalid value '" + v + "' for key '" + key + "'");
    }
}

int to_int(const std::string& v, const std::string& key) {
    const double d = to_double(v, key);
    const int i = static_cast<int>(d);
    if (static_cast<double>(i) != d)
        throw ParseError("config: key '" + key + "' needs an integer, got '" + v + "'");
    return i;
}

}  // namespace

void RunConfig::apply(const std::string& key, const std::string& value) {
    if (key == "quad_n_phi")
        quad_n_phi = to_int(value, key);
    else if (key == "quad_n_theta")
        quad_n_theta = to_int(value, key);
    else if (key == "grid_n_rho")
        grid_n_rho = to_int(value, key);
    else if (key == "grid_n_phi")
        grid_n_phi = to_int(value, key);
    else if (key == "rho_min")
        rho_min = to_double(value, key);
    else if (key == "rho_max")
        rho_max = to_double(value, key);
    else if (key == "tol")
        tol = to_double(value, key);
    else if (key == "max_iter")
        max_iter = to_int(value, key);
    else if (key == "output_dir")
        output_dir = value;
    else if (key == "seed")
        seed = static_cast<std::uint64_t>(to_double(value, key));
    else if (key == "beta_sweep") {
        beta_sweep.clear();
        std::istringstream ss(value);
        std::string tok;
        while (std::getline(ss, tok, ','))
            beta_sweep.push_back(to_double(trim(tok), key));
        if (beta_sweep.empty()) throw ParseError("config: beta_sweep is empty");
    } else {
        throw ParseError("config: unknown key '" + key + "'");
    }
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("config: cannot open '" + path + "'");
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
            throw ParseError("config: line " + std::to_string(lineno) + " is not key=value");
        cfg.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

std::string RunConfig::effective_output_dir() const {
    if (const char* env = std::getenv("MHDLAB_OUTPUT_DIR")) {
        if (env[0] != '\0') return env;
    }
    return output_dir;
}

}  // namespace mhdlab
