#pragma once

#include "rankdist/matrix.hpp"

#include <string>
#include <vector>

namespace rankdist {

/// Design matrix of a linear model: n observations, p basis columns,
/// 1 <= p < n, full column rank. Construction validates the shape and
/// runs a rank check on the column-scaled matrix (relative tolerance
/// 1e-10 on the QR diagonal), so every live DesignMatrix is usable.
struct DesignMatrix {
    Matrix entries;
    std::vector<std::string> column_labels;  // optional; empty when absent

    int n() const { return entries.rows(); }
    int p() const { return entries.cols(); }
};

/// Validate shape and rank and wrap the matrix. Throws InvalidCount when
/// the shape constraint p < n, p >= 1 fails and RankDeficient when the
/// scaled columns are numerically dependent.
DesignMatrix make_design(Matrix entries, std::vector<std::string> labels = {});

/// n points x_i = a + (i-1)(b-a)/(n-1), strictly increasing.
std::vector<double> equispaced(int n, double a, double b);

/// Monomial design [1, x, x^2, ..., x^degree] built from raw x values.
DesignMatrix polynomial_design(const std::vector<double>& x, int degree);

/// Read a design from CSV (see csv.hpp for the dialect).
DesignMatrix load_csv(const std::string& path);

}  // namespace rankdist
