#pragma once

#include <map>
#include <string>
#include <vector>

#include "mhdlab/annulus.hpp"

namespace mhdlab {

// Repeatable double formatting (%.17g round-trips exactly).
std::string format_double(double v);

// CSV with a leading '# key=value' metadata block so every output file is
// self-describing. Keys are emitted in insertion order.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);
    ~CsvWriter();  // flushes if close() was not called

    void meta(const std::string& key, const std::string& value);
    void meta(const std::string& key, double value);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& values);
    void close();

private:
    std::string path_;
    std::string buffer_;
    bool closed_ = false;
};

// Grid dumps: metadata carries the shell geometry, rows are rho,phi,value.
void write_grid_csv(const std::string& path, const AnnulusGrid& grid, const GridScalar& values,
                    const std::map<std::string, std::string>& extra_meta = {});

struct GridCsv {
    AnnulusGrid grid;
    GridScalar values;
};
GridCsv read_grid_csv(const std::string& path);

}  // namespace mhdlab
