#pragma once

#include "rankdist/design.hpp"
#include "rankdist/matrix.hpp"

#include <vector>

namespace rankdist {

/// Outcome of the residual-tie scan of a hat matrix. Pairwise-distinct
/// residuals are guaranteed when either condition holds:
///   - leverage_condition: at most one leverage H_ii >= 1/2 (the
///     sufficient hypothesis under which the exact formulas are stated);
///   - pairwise_condition: no pair (i, j) satisfies the tie condition
///     H_ii = H_jj = H_ij + 1 (the exhaustive check).
struct TieFreeReport {
    bool leverage_condition = false;
    bool pairwise_condition = false;
    int high_leverage_count = 0;   // #{i : H_ii >= 1/2 - 1e-10}
    int tie_pair_count = 0;

    bool tie_free() const { return leverage_condition || pairwise_condition; }
};

/// Orthogonal projection onto the column space of a design matrix,
/// H = D (D^T D)^{-1} D^T, built as Q1 Q1^T from a Householder QR and
/// symmetrized once. Immutable after construction; concurrent reads are
/// safe. Entry accessors use the 1-based index convention of the rest of
/// the statistics API.
class HatMatrix {
public:
    HatMatrix(Matrix h, int p);

    int n() const { return h_.rows(); }
    int p() const { return p_; }
    double eta() const { return eta_; }

    /// H_ij with 1-based i, j. Throws IndexOutOfRange.
    double entry(int i, int j) const;

    /// Leverage H_ii with 1-based i.
    double leverage(int i) const;

    const Matrix& entries() const { return h_; }
    const std::vector<double>& leverages() const { return lev_; }

    /// max_i |sum_j H_ij - 1|; zero means the column space contains the
    /// constant vector (H 1 = 1).
    double intercept_deviation() const { return intercept_dev_; }
    bool spans_intercept(double tol = 1e-9) const { return intercept_dev_ <= tol; }

    const TieFreeReport& tie_report() const { return ties_; }

private:
    Matrix h_;
    std::vector<double> lev_;
    int p_;
    double eta_;
    double intercept_dev_;
    TieFreeReport ties_;
};

HatMatrix compute_hat_matrix(const DesignMatrix& design);

/// Kronecker-delta contrast (e_k - e_i)^T (e_l - e_j); indices 1-based.
int delta_contrast(int k, int l, int i, int j, int n);

/// Hat-matrix contrast (e_k - e_i)^T H (e_l - e_j) =
/// H_kl + H_ij - H_kj - H_il; indices 1-based.
double h_contrast(const HatMatrix& h, int k, int l, int i, int j);

/// Lemma-level tie test for one pair (i != j): true iff
/// |H_ii - H_jj| <= 1e-10 and |H_ii - H_ij - 1| <= 1e-10, i.e. the two
/// residuals coincide almost surely.
bool tie_condition(const HatMatrix& h, int i, int j);

TieFreeReport scan_ties(const Matrix& h);

/// Gate for the exact-distortion formulas; true when either condition of
/// the TieFreeReport holds.
bool tie_free(const HatMatrix& h);

}  // namespace rankdist
