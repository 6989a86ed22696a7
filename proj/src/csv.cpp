#include "rankdist/csv.hpp"

#include "rankdist/errors.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rankdist {

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

bool parse_double(const std::string& cell, double& out) {
    const std::string t = strip(cell);
    if (t.empty()) return false;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");

    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    std::string line;
    std::size_t lineno = 0;
    std::size_t width = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (strip(line).empty()) continue;
        const auto cells = split_row(line);

        std::vector<double> row(cells.size());
        bool numeric = true;
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (!parse_double(cells[c], row[c])) { numeric = false; break; }

        if (!numeric) {
            if (rows.empty() && labels.empty()) {  // header row
                for (const auto& c : cells) labels.push_back(strip(c));
                width = cells.size();
                continue;
            }
            throw ParseError("non-numeric cell at line " + std::to_string(lineno) + " of '" +
                             path + "'");
        }

        if (width == 0) width = cells.size();
        if (cells.size() != width)
            throw ParseError("ragged row at line " + std::to_string(lineno) + " of '" + path +
                             "': expected " + std::to_string(width) + " cells, got " +
                             std::to_string(cells.size()));
        rows.push_back(std::move(row));
    }
    if (in.bad()) throw IoError("read failure on '" + path + "'");
    if (rows.empty()) throw ParseError("'" + path + "' has no numeric rows");

    Matrix m(static_cast<int>(rows.size()), static_cast<int>(width));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return CsvTable{std::move(m), std::move(labels)};
}

void write_csv(std::ostream& os, const Matrix& m, const std::vector<std::string>& labels) {
    if (!labels.empty()) {
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (j) os << ',';
            os << labels[j];
        }
        os << '\n';
    }
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << format_double(m(i, j));
        }
        os << '\n';
    }
}

void write_csv_file(const std::string& path, const Matrix& m,
                    const std::vector<std::string>& labels) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_csv(out, m, labels);
    if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace rankdist
