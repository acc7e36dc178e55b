#include "mns/spectral.hpp"

#include <algorithm>

#include "mns/errors.hpp"

namespace mns {

namespace {

void require_square(const IntMatrix& A) {
    if (A.rows() != A.cols() || A.rows() == 0) {
        throw DimensionError("square matrix required");
    }
}

}  // namespace

bool verify_dilation(const IntMatrix& A) {
    require_square(A);
    if (det(A) == 0) return false;
    RatPoly p = RatPoly::from_int(charpoly(A));
    // Eigenvalues of A all lie outside the closed unit disc exactly when
    // their reciprocals, the roots of the reversed polynomial, lie strictly
    // inside it.
    return schur_stable(p.reversed());
}

DilationReport dilation_report(const IntMatrix& A) {
    require_square(A);
    DilationReport rep;
    rep.char_poly = charpoly(A);
    RatPoly p = RatPoly::from_int(rep.char_poly);
    rep.unit_modulus_eigenvalue = has_root_on_unit_circle(p);
    rep.is_dilation = (det(A) != 0) && schur_stable(p.reversed());
    return rep;
}

SigmaBounds sigma_bounds(const IntMatrix& A) {
    require_square(A);
    const int n = A.rows();
    Int frob2 = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) frob2 += A.at(i, j) * A.at(i, j);
    }

    RatMatrix Ainv = inverse(A);
    Rat frob2_inv = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) frob2_inv += Ainv.at(i, j) * Ainv.at(i, j);
    }

    IntMatrix G = A.transpose() * A;
    Int min_diag = G.at(0, 0);
    for (int i = 1; i < n; ++i) min_diag = std::min(min_diag, G.at(i, i));

    SigmaBounds b;
    b.sigma_max_ub = sqrt_ub(Rat(frob2));
    b.sigma_min_lb = Rat(1) / sqrt_ub(frob2_inv);
    b.sigma_min_ub = sqrt_ub(Rat(min_diag));
    return b;
}

bool mu_exceeds(const IntMatrix& A, const Rat& t_squared) {
    require_square(A);
    IntMatrix G = A.transpose() * A;
    RatMatrix M(G);
    for (int i = 0; i < M.rows(); ++i) M.at(i, i) -= t_squared;
    return is_positive_definite(M);
}

SpectralCert spectral_cert(const IntMatrix& A, const std::vector<Rat>& thresholds_squared) {
    require_square(A);
    SpectralCert cert;
    Int d = det(A);
    cert.q_abs_det = d >= 0 ? d : Int(-d);
    DilationReport rep = dilation_report(A);
    cert.is_dilation = rep.is_dilation;
    cert.unit_modulus_eigenvalue = rep.unit_modulus_eigenvalue;
    cert.sigma = sigma_bounds(A);
    for (const Rat& t2 : thresholds_squared) {
        cert.mu_exceeds_results[rat_string(t2)] = mu_exceeds(A, t2);
    }
    return cert;
}

namespace {

Rat gershgorin_radius(const IntMatrix& sym) {
    Int best = 0;
    for (int i = 0; i < sym.rows(); ++i) {
        Int row = 0;
        for (int j = 0; j < sym.cols(); ++j) row += abs(sym.at(i, j));
        best = std::max(best, row);
    }
    return Rat(best);
}

enum class Extreme { Min, Max };

RatInterval extreme_eigenvalue(const IntMatrix& sym, const Rat& tol, Extreme which) {
    require_square(sym);
    if (!is_symmetric(sym)) throw DimensionError("symmetric matrix required");
    if (tol <= 0) throw DimensionError("tolerance must be positive");

    std::vector<std::pair<Rat, int>> spec;
    if (rational_spectrum(sym, spec)) {
        const Rat& v = (which == Extreme::Min) ? spec.front().first : spec.back().first;
        return RatInterval{v, v};
    }

    RatPoly p = RatPoly::from_int(charpoly(sym));
    SturmChain chain(squarefree_part(p));
    Rat lo = -gershgorin_radius(sym) - 1;
    Rat hi = gershgorin_radius(sym) + 1;

    // Invariant: the sought eigenvalue lies in (lo, hi]; for Min no root is
    // <= lo, for Max no root is > hi.
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        if (which == Extreme::Min) {
            if (chain.count_roots(lo, mid) >= 1) {
                hi = mid;
            } else {
                lo = mid;
            }
        } else {
            if (chain.count_roots(mid, hi) >= 1) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
    return RatInterval{lo, hi};
}

}  // namespace

RatInterval min_eigenvalue_enclosure(const IntMatrix& sym, const Rat& tol) {
    return extreme_eigenvalue(sym, tol, Extreme::Min);
}

RatInterval max_eigenvalue_enclosure(const IntMatrix& sym, const Rat& tol) {
    return extreme_eigenvalue(sym, tol, Extreme::Max);
}

bool rational_spectrum(const IntMatrix& sym, std::vector<std::pair<Rat, int>>& spectrum) {
    require_square(sym);
    if (!is_symmetric(sym)) throw DimensionError("symmetric matrix required");
    RatPoly p = RatPoly::from_int(charpoly(sym));
    auto roots = rational_roots(p);
    int total = 0;
    for (const auto& r : roots) total += r.second;
    if (total != p.degree()) return false;
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    spectrum = std::move(roots);
    return true;
}

}  // namespace mns
