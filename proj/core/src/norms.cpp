#include "mns/norms.hpp"

#include <algorithm>

#include "mns/errors.hpp"

namespace mns {

namespace {

Rat frob_sq(const RatMatrix& m) {
    Rat s = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += m.at(i, j) * m.at(i, j);
    return s;
}

unsigned bits_for_tol(const Rat& tol) {
    if (tol <= 0) throw DimensionError("tolerance must be positive");
    Int inv = ceil_rat(1 / tol);
    return unsigned(mpz_sizeinbase(inv.get_mpz_t(), 2)) + 4;
}

Rat quad_form(const RatMatrix& W, const RatVec& x) {
    RatVec wx = W.mul(x);
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * wx[i];
    return s;
}

// W = sum_{j>=0} (A^-j)^T A^-j is the unique solution of A^T W A - W = A^T A;
// solve the vectorized n^2 x n^2 rational system.
RatMatrix stein_gram(const IntMatrix& A) {
    const int n = A.rows();
    RatMatrix sys(n * n, n * n);
    RatVec rhs(size_t(n) * n, Rat(0));
    IntMatrix G = A.transpose() * A;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int eq = i * n + j;
            rhs[size_t(eq)] = Rat(G.at(i, j));
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    Rat coef = Rat(A.at(k, i) * A.at(l, j));
                    if (k == i && l == j) coef -= 1;
                    sys.at(eq, k * n + l) = coef;
                }
            }
        }
    }
    RatVec w = solve_linear(sys, rhs);
    RatMatrix W(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) W.at(k, l) = w[size_t(k) * n + l];

    if (!is_symmetric(W)) throw InconsistencyError("Gram matrix is not symmetric");
    RatMatrix check = RatMatrix(A.transpose()) * W * RatMatrix(A);
    if (!(check == W + RatMatrix(G))) throw InconsistencyError("Gram matrix fails its defining identity");
    if (!is_positive_definite(W)) throw InconsistencyError("Gram matrix is not positive definite");
    RatMatrix WmI = W - RatMatrix::identity(n);
    if (!is_positive_definite(WmI)) throw InconsistencyError("Gram matrix is not bounded below by I");
    return W;
}

}  // namespace

NormEvaluator make_norm_evaluator(const IntMatrix& A) {
    if (!verify_dilation(A)) throw NotDilationError("norm requires a dilation matrix");

    NormEvaluator ev;
    ev.A_ = A;
    ev.A_inv_ = inverse(A);

    ev.J_ = 1;
    ev.A_inv_J_ = ev.A_inv_;
    while (frob_sq(ev.A_inv_J_) >= Rat(1, 4)) {
        if (ev.J_ > (1U << 24)) throw NotDilationError("inverse powers do not contract");
        ev.J_ *= 2;
        ev.A_inv_J_ = ev.A_inv_J_ * ev.A_inv_J_;
    }
    ev.theta_sq_ = frob_sq(ev.A_inv_J_);

    RatMatrix P = RatMatrix::identity(A.rows());
    Rat block_sum = 0;
    for (unsigned j = 0; j < ev.J_; ++j) {
        Rat f = frob_sq(P);
        ev.partial_frobs_.push_back(f);
        block_sum += f;
        P = P * ev.A_inv_;
    }
    ev.c_upper_ = block_sum / (1 - ev.theta_sq_);

    ev.W_ = stein_gram(A);
    return ev;
}

Rat NormEvaluator::norm_prime_sq(const RatVec& x) const { return quad_form(W_, x); }

Rat NormEvaluator::norm_prime_sq(const IntVec& x) const { return quad_form(W_, to_rat(x)); }

RatInterval NormEvaluator::norm_prime(const RatVec& x, const Rat& tol) const {
    return sqrt_enclosure(norm_prime_sq(x), bits_for_tol(tol));
}

RatInterval NormEvaluator::norm_prime(const IntVec& x, const Rat& tol) const {
    return norm_prime(to_rat(x), tol);
}

RatInterval NormEvaluator::norm_prime_truncated(const RatVec& x, const Rat& tol) const {
    const unsigned bits = bits_for_tol(tol) + 4;
    Rat partial = 0;
    RatVec y = x;
    for (int iter = 0; iter < 100000; ++iter) {
        Rat head = quad_l2(y);
        Rat lo = sqrt_lb(partial + head, bits);
        Rat hi = sqrt_ub(partial + c_upper_ * head, bits);
        if (hi - lo <= tol) return RatInterval{lo, hi};
        partial += head;
        y = A_inv_.mul(y);
    }
    throw InconsistencyError("truncated norm series failed to converge");
}

NormalNormValue norm_prime_normal(const IntMatrix& A, const IntVec& x, const Rat& tol) {
    if (!is_normal(A)) throw NotNormalError("normal-case norm requires A^T A = A A^T");
    if (!verify_dilation(A)) throw NotDilationError("norm requires a dilation matrix");
    IntMatrix G = A.transpose() * A;
    RatMatrix W = inverse(RatMatrix(G - IntMatrix::identity(A.rows()))) * RatMatrix(G);
    NormalNormValue v;
    v.value_sq = quad_form(W, to_rat(x));
    v.value = sqrt_enclosure(v.value_sq, bits_for_tol(tol));
    return v;
}

namespace {

// Bisection bound for lambda_min / lambda_max of the symmetric-definite
// pencil (G, W): returns (t_lo, t_hi) with the eigenvalue in (t_lo, t_hi].
// PD(G - t W) holds iff t < lambda_min; PD(t W - G) holds iff t > lambda_max.
std::pair<Rat, Rat> pencil_min(const RatMatrix& G, const RatMatrix& W, int steps) {
    Rat t_lo = 0;
    Rat t_hi = G.at(0, 0) / W.at(0, 0);
    for (int i = 0; i < steps; ++i) {
        Rat mid = (t_lo + t_hi) / 2;
        if (is_positive_definite(G - mid * W)) {
            t_lo = mid;
        } else {
            t_hi = mid;
        }
    }
    return {t_lo, t_hi};
}

std::pair<Rat, Rat> pencil_max(const RatMatrix& G, const RatMatrix& W, int steps) {
    Rat t_lo = G.at(0, 0) / W.at(0, 0);
    Rat trace = 0;
    for (int i = 0; i < G.rows(); ++i) trace += G.at(i, i);
    Rat t_hi = trace + 1;  // W >= I makes t_hi W - G >= t_hi I - G > 0
    for (int i = 0; i < steps; ++i) {
        Rat mid = (t_lo + t_hi) / 2;
        if (is_positive_definite(mid * W - G)) {
            t_hi = mid;
        } else {
            t_lo = mid;
        }
    }
    return {t_lo, t_hi};
}

Rat sqrt_lb_above_one(const Rat& x) {
    // x > 1 exactly; pick enough precision that the lower bound clears 1
    for (unsigned bits = 96;; bits *= 2) {
        Rat lb = sqrt_lb(x, bits);
        if (lb > 1) return lb;
        if (bits > (1U << 20)) throw InconsistencyError("sqrt lower bound failed to separate from 1");
    }
}

Rat positive_sqrt_lb(const Rat& x) {
    for (unsigned bits = 96;; bits *= 2) {
        Rat lb = sqrt_lb(x, bits);
        if (lb > 0) return lb;
        if (bits > (1U << 20)) throw InconsistencyError("sqrt lower bound failed to separate from 0");
    }
}

}  // namespace

BoundsReport bounds_report(const NormEvaluator& ev) {
    const IntMatrix& A = ev.A();
    const int n = ev.n();
    const RatMatrix& W = ev.gram();
    IntMatrix G_int = A.transpose() * A;
    RatMatrix G(G_int);

    BoundsReport rep;
    rep.c_upper = ev.c_upper();
    rep.sigma = sigma_bounds(A);
    rep.j_depth = ev.J();
    rep.theta_sq = ev.theta_sq();
    rep.gram = W;

    // Frobenius path: ||Ax||'^2 = ||x||'^2 + ||Ax||_2^2 gives
    // m^2 >= 1 + sigma_min^2 / C and M^2 < 1 + sigma_max^2,
    // and rho^2 <= C * n / 4 on the closed box.
    rep.m_lower_frobenius =
        sqrt_lb_above_one(1 + rep.sigma.sigma_min_lb * rep.sigma.sigma_min_lb / rep.c_upper);
    rep.M_upper_frobenius = sqrt_ub(1 + rep.sigma.sigma_max_ub * rep.sigma.sigma_max_ub, 96);
    rep.rho_upper_frobenius = sqrt_ub(Rat(n) * rep.c_upper, 96) / 2;

    // Pencil path: exact Sylvester tests against the exact Gram matrix.
    auto [min_lo, min_hi] = pencil_min(G, W, 64);
    auto [max_lo, max_hi] = pencil_max(G, W, 64);
    (void)min_hi;
    (void)max_lo;
    rep.m_sq_lower_pencil = 1 + min_lo;
    rep.M_sq_upper_pencil = 1 + max_hi;
    Rat m_pencil = sqrt_lb(rep.m_sq_lower_pencil, 96);
    Rat M_pencil = sqrt_ub(rep.M_sq_upper_pencil, 96);

    // rho^2 is an exact rational: the quadratic form's maximum over the
    // closed box is attained at a vertex.
    Rat rho_vertex_ub;
    bool have_vertex_rho = n <= 16;
    if (have_vertex_rho) {
        Rat best = 0;
        RatVec v(size_t(n), Rat(0));
        for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
            for (int i = 0; i < n; ++i) v[size_t(i)] = (mask >> i) & 1UL ? Rat(1, 2) : Rat(-1, 2);
            best = std::max(best, quad_form(W, v));
        }
        rep.rho_sq_exact = best;
        rho_vertex_ub = sqrt_ub(best, 96);
    } else {
        rep.rho_sq_exact = rep.rho_upper_frobenius * rep.rho_upper_frobenius;
        rho_vertex_ub = rep.rho_upper_frobenius;
    }

    rep.m_lower = std::max(rep.m_lower_frobenius, m_pencil);
    rep.M_upper = std::min(rep.M_upper_frobenius, M_pencil);
    rep.rho_upper = std::min(rep.rho_upper_frobenius, rho_vertex_ub);

    if (is_normal(A)) {
        NormalExact ne;
        std::vector<std::pair<Rat, int>> spectrum;
        if (rational_spectrum(G_int, spectrum)) {
            ne.spectrum_rational = true;
            ne.m_sq = RatInterval{spectrum.front().first, spectrum.front().first};
            ne.M_sq = RatInterval{spectrum.back().first, spectrum.back().first};
        } else {
            ne.spectrum_rational = false;
            Rat tol = Rat(1, Int(1) << 80);
            ne.m_sq = min_eigenvalue_enclosure(G_int, tol);
            ne.M_sq = max_eigenvalue_enclosure(G_int, tol);
        }
        ne.m = RatInterval{sqrt_lb(ne.m_sq.lo, 96), sqrt_ub(ne.m_sq.hi, 96)};
        ne.M = RatInterval{sqrt_lb(ne.M_sq.lo, 96), sqrt_ub(ne.M_sq.hi, 96)};
        rep.normal_exact = ne;
        // For normal A the pencil extremes coincide with min/max |lambda|^2,
        // so these enclosures may tighten m and M further.
        if (ne.m.lo > 1) rep.m_lower = std::max(rep.m_lower, ne.m.lo);
        rep.M_upper = std::min(rep.M_upper, ne.M.hi);
    }

    rep.R_upper = rep.M_upper * rep.rho_upper / (rep.m_lower - 1);
    rep.candidate_radius_l2 = rep.R_upper;

    if (rep.sigma.sigma_min_lb > 1) {
        const Rat& mu_lb = rep.sigma.sigma_min_lb;
        Rat mu_ub = std::max(rep.sigma.sigma_min_ub, mu_lb);
        Rat num = mu_ub * rep.sigma.sigma_max_ub * sqrt_ub(Rat(n), 96);
        Rat den = 2 * (mu_lb - 1) * positive_sqrt_lb(mu_lb - 1) * positive_sqrt_lb(mu_lb + 1);
        rep.singular_value_R_bound = num / den;
    }

    return rep;
}

}  // namespace mns
