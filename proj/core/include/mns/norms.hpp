#pragma once

#include <optional>
#include <vector>

#include "mns/matrix.hpp"
#include "mns/spectral.hpp"

namespace mns {

/// Evaluator for the expanding norm  ||x||' = (sum_{j>=0} ||A^-j x||_2^2)^(1/2).
///
/// Two certified routes are provided. The exact route uses the Gram matrix
/// W = sum_{j>=0} (A^-j)^T A^-j, the unique solution of A^T W A = W + A^T A,
/// so ||x||'^2 = x^T W x is an exact rational. The truncation route sums the
/// series directly and bounds the tail by block-geometric decay; it exists as
/// an independent cross-check and for callers that want the raw series data.
class NormEvaluator {
public:
    const IntMatrix& A() const { return A_; }
    const RatMatrix& A_inv() const { return A_inv_; }
    int n() const { return A_.rows(); }

    /// Block depth J with ||A^-J||_F < 1/2, found by doubling.
    unsigned J() const { return J_; }
    /// theta^2 = Frobenius bound squared for A^-J (exact rational, < 1/4).
    const Rat& theta_sq() const { return theta_sq_; }
    /// Exact ||A^-j||_F^2 for j = 0 .. J-1.
    const std::vector<Rat>& partial_frobs() const { return partial_frobs_; }
    /// Certified upper bound on sum_{j>=0} ||A^-j||_op^2.
    const Rat& c_upper() const { return c_upper_; }

    /// Gram matrix W of the exact route.
    const RatMatrix& gram() const { return W_; }

    /// Exact ||x||'^2 = x^T W x.
    Rat norm_prime_sq(const RatVec& x) const;
    Rat norm_prime_sq(const IntVec& x) const;

    /// Enclosure of ||x||' with hi - lo <= tol (exact route).
    RatInterval norm_prime(const RatVec& x, const Rat& tol) const;
    RatInterval norm_prime(const IntVec& x, const Rat& tol) const;

    /// Enclosure of ||x||' via truncated series plus geometric tail bound.
    RatInterval norm_prime_truncated(const RatVec& x, const Rat& tol) const;

private:
    friend NormEvaluator make_norm_evaluator(const IntMatrix& A);

    IntMatrix A_;
    RatMatrix A_inv_;
    unsigned J_ = 1;
    Rat theta_sq_;
    std::vector<Rat> partial_frobs_;
    Rat c_upper_;
    RatMatrix A_inv_J_;  // A^-J
    RatMatrix W_;
};

/// Requires verify_dilation(A); throws NotDilationError otherwise.
NormEvaluator make_norm_evaluator(const IntMatrix& A);

struct NormalExact {
    /// Whether the |lambda|^2 values (eigenvalues of A^T A) are rational.
    bool spectrum_rational = false;
    RatInterval m_sq{0, 0};
    RatInterval M_sq{0, 0};
    RatInterval m{0, 0};
    RatInterval M{0, 0};
};

/// Exact ||x||'^2 for normal A via W = (G - I)^-1 G with G = A^T A,
/// together with an enclosure of ||x||'. Throws NotNormalError.
struct NormalNormValue {
    Rat value_sq;
    RatInterval value;
};
NormalNormValue norm_prime_normal(const IntMatrix& A, const IntVec& x,
                                  const Rat& tol = Rat(1, 1000000000));

struct BoundsReport {
    // Certified constants; every bound is on the true m, M, rho, R.
    Rat c_upper;
    Rat m_lower;    // 1 < m_lower <= m
    Rat M_upper;    // >= M
    Rat rho_upper;  // >= rho (closed-box supremum)
    Rat R_upper;    // = M_upper * rho_upper / (m_lower - 1) >= R
    Rat candidate_radius_l2;  // == R_upper

    // The un-tightened Frobenius-path values (diagnostics).
    Rat m_lower_frobenius;
    Rat M_upper_frobenius;
    Rat rho_upper_frobenius;

    // Pencil-route certificates: m^2 = 1 + lambda_min(G, W),
    // M^2 = 1 + lambda_max(G, W), rho^2 = max over box vertices of v^T W v.
    Rat m_sq_lower_pencil;
    Rat M_sq_upper_pencil;
    Rat rho_sq_exact;

    SigmaBounds sigma;
    unsigned j_depth = 1;
    Rat theta_sq;

    std::optional<NormalExact> normal_exact;
    /// Closed-form singular-value bound on R, reported when sigma_min_lb > 1.
    std::optional<Rat> singular_value_R_bound;

    RatMatrix gram;  // W, for downstream region tests
};

BoundsReport bounds_report(const NormEvaluator& ev);

}  // namespace mns
