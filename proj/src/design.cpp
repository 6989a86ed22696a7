#include "rankdist/design.hpp"

#include "rankdist/csv.hpp"
#include "rankdist/errors.hpp"
#include "rankdist/qr.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace rankdist {

namespace {

constexpr double kRankRelTol = 1e-10;

// Rank test on the column-scaled matrix: monomial designs are badly
// conditioned, and the hat matrix is invariant to column scaling anyway.
void check_rank(const Matrix& m) {
    Matrix scaled = m;
    for (int j = 0; j < m.cols(); ++j) {
        double norm = 0.0;
        for (int i = 0; i < m.rows(); ++i) norm = std::hypot(norm, m(i, j));
        if (norm == 0.0) throw RankDeficient("column " + std::to_string(j + 1) + " is zero");
        for (int i = 0; i < m.rows(); ++i) scaled(i, j) = m(i, j) / norm;
    }
    HouseholderQr qr(scaled);
    const int rank = qr.effective_rank(kRankRelTol);
    if (rank < m.cols())
        throw RankDeficient("effective rank " + std::to_string(rank) + " < p = " +
                            std::to_string(m.cols()));
}

}  // namespace

DesignMatrix make_design(Matrix entries, std::vector<std::string> labels) {
    const int n = entries.rows();
    const int p = entries.cols();
    if (p < 1) throw InvalidCount("design needs p >= 1, got p = " + std::to_string(p));
    if (p >= n)
        throw InvalidCount("design needs p < n, got p = " + std::to_string(p) + ", n = " +
                           std::to_string(n));
    if (!labels.empty() && static_cast<int>(labels.size()) != p)
        throw InvalidCount("label count does not match column count");
    for (double v : entries.data())
        if (!std::isfinite(v)) throw InvalidRange("design entries must be finite");
    check_rank(entries);
    return DesignMatrix{std::move(entries), std::move(labels)};
}

std::vector<double> equispaced(int n, double a, double b) {
    if (n < 2) throw InvalidCount("equispaced needs n >= 2, got " + std::to_string(n));
    if (!(a < b)) throw InvalidRange("equispaced needs a < b");
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        x[static_cast<std::size_t>(i)] = a + (static_cast<double>(i) * (b - a)) / (n - 1);
    return x;
}

DesignMatrix polynomial_design(const std::vector<double>& x, int degree) {
    const int n = static_cast<int>(x.size());
    const int p = degree + 1;
    if (degree < 0) throw InvalidCount("degree must be >= 0");
    if (p >= n)
        throw InvalidCount("polynomial design needs degree + 1 < n, got degree = " +
                           std::to_string(degree) + ", n = " + std::to_string(n));
    const std::set<double> distinct(x.begin(), x.end());
    if (static_cast<int>(distinct.size()) < p)
        throw RankDeficient("polynomial design needs at least degree + 1 distinct x values");

    Matrix m(n, p);
    for (int i = 0; i < n; ++i) {
        double pow = 1.0;
        for (int j = 0; j < p; ++j) {
            m(i, j) = pow;
            pow *= x[static_cast<std::size_t>(i)];
        }
    }
    std::vector<std::string> labels(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) labels[static_cast<std::size_t>(j)] = "x^" + std::to_string(j);
    return make_design(std::move(m), std::move(labels));
}

DesignMatrix load_csv(const std::string& path) {
    CsvTable t = read_csv(path);
    return make_design(std::move(t.values), std::move(t.labels));
}

}  // namespace rankdist
