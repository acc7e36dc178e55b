#pragma once

#include <map>
#include <string>

#include "mns/matrix.hpp"
#include "mns/polynomial.hpp"

namespace mns {

/// True when every eigenvalue of A has modulus strictly greater than one.
/// Decided exactly: the reversed characteristic polynomial must be Schur
/// stable (all roots strictly inside the unit circle).
bool verify_dilation(const IntMatrix& A);

struct DilationReport {
    bool is_dilation = false;
    /// Some eigenvalue has modulus exactly one (detected exactly).
    bool unit_modulus_eigenvalue = false;
    std::vector<Int> char_poly;
};
DilationReport dilation_report(const IntMatrix& A);

/// Certified rational singular value bounds from Frobenius norms:
///   sigma_max <= sigma_max_ub = ub(||A||_F)
///   sigma_min >= sigma_min_lb = 1 / ub(||A^-1||_F)
///   sigma_min <= sigma_min_ub = ub(sqrt(min diagonal of A^T A))
struct SigmaBounds {
    Rat sigma_min_lb;
    Rat sigma_min_ub;
    Rat sigma_max_ub;
};
SigmaBounds sigma_bounds(const IntMatrix& A);

/// Exact test of mu(A)^2 = lambda_min(A^T A) > t_squared, by Sylvester's
/// criterion on A^T A - t_squared * I. Strict: boundary returns false.
bool mu_exceeds(const IntMatrix& A, const Rat& t_squared);

struct SpectralCert {
    Int q_abs_det;
    bool is_dilation = false;
    bool unit_modulus_eigenvalue = false;
    SigmaBounds sigma;
    /// threshold t^2 (as string key via rat_string) -> mu(A)^2 > t^2
    std::map<std::string, bool> mu_exceeds_results;
};
SpectralCert spectral_cert(const IntMatrix& A, const std::vector<Rat>& thresholds_squared);

/// Certified enclosure of the smallest / largest eigenvalue of a symmetric
/// integer matrix, by Sturm bisection of the characteristic polynomial.
/// Enclosures are exact points when the eigenvalue is rational.
RatInterval min_eigenvalue_enclosure(const IntMatrix& sym, const Rat& tol);
RatInterval max_eigenvalue_enclosure(const IntMatrix& sym, const Rat& tol);

/// Whether the characteristic polynomial of `sym` splits over Q; when it
/// does, `spectrum` receives all eigenvalues with multiplicity, ascending.
bool rational_spectrum(const IntMatrix& sym, std::vector<std::pair<Rat, int>>& spectrum);

}  // namespace mns
