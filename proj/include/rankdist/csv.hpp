#pragma once

#include "rankdist/matrix.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace rankdist {

struct CsvTable {
    Matrix values;
    std::vector<std::string> labels;  // empty when the file had no header row
};

/// Parse a comma-separated numeric table. Decimal point ".", UTF-8.
/// A header row is auto-detected: if any cell of the first row fails to
/// parse as a number, the row is taken as labels. Ragged rows and
/// non-numeric body cells raise ParseError; unreadable files raise IoError.
CsvTable read_csv(const std::string& path);

/// Strict numeric parse of one cell (whole string must be consumed).
bool parse_double(const std::string& cell, double& out);

/// Shortest exact decimal form: %.17g round-trips every finite double.
std::string format_double(double x);

void write_csv(std::ostream& os, const Matrix& m, const std::vector<std::string>& labels = {});
void write_csv_file(const std::string& path, const Matrix& m,
                    const std::vector<std::string>& labels = {});

}  // namespace rankdist
