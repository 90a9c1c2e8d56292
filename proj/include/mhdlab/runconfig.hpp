#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mhdlab {

// Plain-text key=value run configuration. Unknown keys are errors; '#' starts
// a comment. Defaults below are also what the CLI uses when no file is given.
struct RunConfig {
    int quad_n_phi = 64;
    int quad_n_theta = 32;
    int grid_n_rho = 128;
    int grid_n_phi = 64;
    double rho_min = 0.05;
    double rho_max = 2.0;
    double tol = 1e-10;
    int max_iter = 200;
    std::vector<double> beta_sweep = {0.25, 0.5, 1.0, 2.0};
    std::string output_dir = ".";
    std::uint64_t seed = 12345;

    static RunConfig from_file(const std::string& path);
    // Parses one key=value assignment into this config.
    void apply(const std::string& key, const std::string& value);

    // MHDLAB_OUTPUT_DIR overrides output_dir when set.
    std::string effective_output_dir() const;
};

}  // namespace mhdlab
