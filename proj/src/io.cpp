#include "mhdlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mhdlab/errors.hpp"

namespace mhdlab {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path) : path_(path) {}

CsvWriter::~CsvWriter() {
    try {
        close();
    } catch (...) {
        // destructor must not throw; an explicit close() reports the failure
    }
}

void CsvWriter::meta(const std::string& key, const std::string& value) {
    buffer_ += "# " + key + "=" + value + "\n";
}

void CsvWriter::meta(const std::string& key, double value) { meta(key, format_double(value)); }

void CsvWriter::header(const std::vector<std::string>& columns) {
    for (size_t i = 0; i < columns.size(); ++i) {
        if (i) buffer_ += ",";
        buffer_ += columns[i];
    }
    buffer_ += "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) buffer_ += ",";
        buffer_ += format_double(values[i]);
    }
    buffer_ += "\n";
}

void CsvWriter::row_mixed(const std::vector<std::string>& values) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) buffer_ += ",";
        buffer_ += values[i];
    }
    buffer_ += "\n";
}

void CsvWriter::close() {
    if (closed_) return;
    std::ofstream out(path_, std::ios::binary);  // binary: byte-identical output
    if (!out) throw Error("cannot open output file: " + path_);
    out << buffer_;
    closed_ = true;
}

void write_grid_csv(const std::string& path, const AnnulusGrid& grid, const GridScalar& values,
                    const std::map<std::string, std::string>& extra_meta) {
    CsvWriter w(path);
    w.meta("rho_min", grid.rho_min);
    w.meta("rho_max", grid.rho_max);
    w.meta("n_rho", static_cast<double>(grid.n_rho));
    w.meta("n_phi", static_cast<double>(grid.n_phi));
    for (const auto& [k, v] : extra_meta) w.meta(k, v);
    w.header({"rho", "phi", "value"});
    for (int i = 0; i < grid.n_rho; ++i)
        for (int j = 0; j < grid.n_phi; ++j)
            w.row({grid.rho(i), grid.phi(j), values.at(i, j)});
    w.close();
}

GridCsv read_grid_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open grid file: " + path);
    std::map<std::string, std::string> meta;
    std::vector<double> values;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq != std::string::npos) {
                std::string key = line.substr(1, eq - 1);
                key.erase(0, key.find_first_not_of(' '));
                key.erase(key.find_last_not_of(' ') + 1);
                meta[key] = line.substr(eq + 1);
            }
            continue;
        }
        if (!header_seen) {  // rho,phi,value
            header_seen = true;
            continue;
        }
        std::istringstream ss(line);
        std::string tok;
        std::vector<double> cols;
        while (std::getline(ss, tok, ',')) cols.push_back(std::stod(tok));
        if (cols.size() != 3) throw ParseError("grid file row must have 3 columns: " + line);
        values.push_back(cols[2]);
    }
    for (const char* key : {"rho_min", "rho_max", "n_rho", "n_phi"})
        if (!meta.count(key))
            throw ParseError(std::string("grid file missing metadata key '") + key + "'");

    AnnulusGrid grid(std::stod(meta["rho_min"]), std::stod(meta["rho_max"]),
                     static_cast<int>(std::stod(meta["n_rho"])),
                     static_cast<int>(std::stod(meta["n_phi"])));
    if (values.size() != static_cast<size_t>(grid.n_rho) * grid.n_phi)
        throw ParseError("grid file row count does not match n_rho * n_phi");
    GridScalar gs(grid.n_rho, grid.n_phi);
    gs.v = std::move(values);
    return {grid, std::move(gs)};
}

}  // namespace mhdlab
