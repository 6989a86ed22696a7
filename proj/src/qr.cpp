#include "rankdist/qr.hpp"

#include <cmath>

namespace rankdist {

HouseholderQr::HouseholderQr(const Matrix& a)
    : v_(a), beta_(static_cast<std::size_t>(a.cols()), 0.0),
      rdiag_(static_cast<std::size_t>(a.cols()), 0.0), n_(a.rows()), p_(a.cols()) {
    for (int j = 0; j < p_; ++j) {
        // norm of the active column segment a[j..n-1, j]
        double norm = 0.0;
        for (int i = j; i < n_; ++i) norm = std::hypot(norm, v_(i, j));

        if (norm == 0.0) {
            beta_[static_cast<std::size_t>(j)] = 0.0;
            rdiag_[static_cast<std::size_t>(j)] = 0.0;
            continue;
        }

        // reflect onto -sign(a_jj) * norm * e_j to avoid cancellation
        const double alpha = v_(j, j) >= 0.0 ? -norm : norm;
        v_(j, j) -= alpha;
        double vtv = 0.0;
        for (int i = j; i < n_; ++i) vtv += v_(i, j) * v_(i, j);
        beta_[static_cast<std::size_t>(j)] = vtv > 0.0 ? 2.0 / vtv : 0.0;
        rdiag_[static_cast<std::size_t>(j)] = alpha;

        // apply the reflector to the remaining columns
        for (int c = j + 1; c < p_; ++c) {
            double dot = 0.0;
            for (int i = j; i < n_; ++i) dot += v_(i, j) * v_(i, c);
            dot *= beta_[static_cast<std::size_t>(j)];
            for (int i = j; i < n_; ++i) v_(i, c) -= dot * v_(i, j);
        }
    }
}

int HouseholderQr::effective_rank(double rel_tol) const {
    double max_diag = 0.0;
    for (double d : rdiag_) max_diag = std::max(max_diag, std::abs(d));
    if (max_diag == 0.0) return 0;
    int rank = 0;
    for (double d : rdiag_)
        if (std::abs(d) > rel_tol * max_diag) ++rank;
    return rank;
}

Matrix HouseholderQr::thin_q() const {
    // accumulate Q1 = P_0 P_1 ... P_{p-1} [e_0 .. e_{p-1}] by applying the
    // reflectors in reverse order to the leading columns of the identity
    Matrix q(n_, p_, 0.0);
    for (int j = 0; j < p_; ++j) q(j, j) = 1.0;
    for (int j = p_ - 1; j >= 0; --j) {
        const double beta = beta_[static_cast<std::size_t>(j)];
        if (beta == 0.0) continue;
        for (int c = 0; c < p_; ++c) {
            double dot = 0.0;
            for (int i = j; i < n_; ++i) dot += v_(i, j) * q(i, c);
            dot *= beta;
            for (int i = j; i < n_; ++i) q(i, c) -= dot * v_(i, j);
        }
    }
    return q;
}

}  // namespace rankdist
