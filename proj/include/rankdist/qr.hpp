#pragma once

#include "rankdist/matrix.hpp"

#include <vector>

namespace rankdist {

/// Householder QR of an n x p matrix (n >= p). Keeps the reflectors and
/// the diagonal of R; exposes the thin orthonormal factor Q1 (n x p) and
/// an effective-rank count based on the relative magnitude of the R
/// diagonal.
class HouseholderQr {
public:
    explicit HouseholderQr(const Matrix& a);

    /// Number of diagonal entries of R with |R_jj| > tol * max_j |R_jj|.
    int effective_rank(double rel_tol) const;

    /// Thin factor: n x p matrix with orthonormal columns spanning the
    /// column space of the input (when full rank).
    Matrix thin_q() const;

    const std::vector<double>& r_diagonal() const { return rdiag_; }

private:
    Matrix v_;                   // reflectors, stored below the diagonal (column j in rows j..n-1)
    std::vector<double> beta_;   // reflector scales, 2 / (v^T v)
    std::vector<double> rdiag_;
    int n_;
    int p_;
};

}  // namespace rankdist
