#include "heider/results_csv.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "heider/errors.hpp"

namespace heider {

std::string format_g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_results_csv(std::ostream& out, const std::vector<CellEstimate>& cells) {
    out << kResultsCsvHeader << '\n';
    for (const CellEstimate& c : cells)
        out << format_g6(c.beta1) << ',' << format_g6(c.beta2) << ',' << c.n << ',' << c.trials
            << ',' << c.balanced << ',' << c.jammed << ',' << c.undecided << ','
            << format_g6(c.p_hb) << ',' << format_g6(c.std_err) << '\n';
}

void write_results_csv(const std::string& path, const std::vector<CellEstimate>& cells) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_results_csv: cannot open " + path);
    write_results_csv(out, cells);
    out.flush();
    if (!out) throw IoError("write_results_csv: write failed for " + path);
}

std::vector<CellEstimate> read_results_csv(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line)) throw IoError(source + ": empty file");
    if (line == std::string(kResultsCsvHeader) + "\r") line.pop_back();
    if (line != kResultsCsvHeader)
        throw IoError(source + ": unexpected header \"" + line + "\"");

    std::vector<CellEstimate> cells;
    long row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::istringstream fields(line);
        CellEstimate c;
        char sep[8];
        fields >> c.beta1 >> sep[0] >> c.beta2 >> sep[1] >> c.n >> sep[2] >> c.trials >> sep[3] >>
            c.balanced >> sep[4] >> c.jammed >> sep[5] >> c.undecided >> sep[6] >> c.p_hb >>
            sep[7] >> c.std_err;
        bool commas = true;
        for (char ch : sep) commas = commas && ch == ',';
        if (!fields || !commas)
            throw IoError(source + ": malformed row " + std::to_string(row) + ": \"" + line +
                          "\"");
        std::string tail;
        if (fields >> tail)
            throw IoError(source + ": trailing fields in row " + std::to_string(row));
        if (c.trials < 1 || c.balanced + c.jammed + c.undecided != c.trials)
            throw IoError(source + ": inconsistent tallies in row " + std::to_string(row));
        cells.push_back(c);
    }
    return cells;
}

std::vector<CellEstimate> read_results_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("read_results_csv: cannot open " + path);
    return read_results_csv(in, path);
}

}  // namespace heider
