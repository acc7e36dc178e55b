#include "mns/digits.hpp"

#include <algorithm>

#include "mns/errors.hpp"

namespace mns {

std::string convention_name(DigitConvention conv) {
    switch (conv) {
        case DigitConvention::Canonical: return "canonical";
        case DigitConvention::LowerHalfOpen: return "f";
        case DigitConvention::UpperHalfOpen: return "u";
    }
    return "?";
}

bool in_box(const RatVec& t, DigitConvention conv) {
    const Rat half(1, 2);
    for (const Rat& c : t) {
        switch (conv) {
            case DigitConvention::Canonical:
                if (c < -half || c > half) return false;
                break;
            case DigitConvention::LowerHalfOpen:
                if (c < -half || c >= half) return false;
                break;
            case DigitConvention::UpperHalfOpen:
                if (c <= -half || c > half) return false;
                break;
        }
    }
    return true;
}

namespace {

constexpr unsigned long kCandidateBudget = 20000000UL;

// Coordinate extremes of A*[-1/2,1/2]^n occur at the box vertices; the i-th
// coordinate there is +-(sum_j |a_ij|)/2.
std::vector<Int> candidate_coord_bounds(const IntMatrix& A) {
    std::vector<Int> bounds;
    Int budget = 1;
    for (int i = 0; i < A.rows(); ++i) {
        Int row_abs = 0;
        for (int j = 0; j < A.cols(); ++j) row_abs += abs(A.at(i, j));
        Int b = row_abs / 2;  // |x_i| <= row_abs/2 and x_i integral
        bounds.push_back(b);
        budget *= 2 * b + 1;
        if (budget > long(kCandidateBudget)) {
            throw OrbitBudgetError("digit candidate box exceeds enumeration budget");
        }
    }
    return bounds;
}

}  // namespace

std::vector<IntVec> box_lattice_points(const IntMatrix& A, DigitConvention conv) {
    if (A.rows() != A.cols() || A.rows() == 0) throw DimensionError("square matrix required");
    if (det(A) == 0) throw SingularMatrixError("digit construction requires det != 0");
    const int n = A.rows();
    RatMatrix Ainv = inverse(A);
    std::vector<Int> bounds = candidate_coord_bounds(A);

    std::vector<IntVec> out;
    IntVec x(n);
    for (int i = 0; i < n; ++i) x[i] = -bounds[size_t(i)];
    while (true) {
        RatVec t = Ainv.mul(to_rat(x));
        if (in_box(t, conv)) out.push_back(x);
        int i = n - 1;
        while (i >= 0 && x[i] == bounds[size_t(i)]) {
            x[i] = -bounds[size_t(i)];
            --i;
        }
        if (i < 0) break;
        x[i] += 1;
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

IntVec residue_label(const SmithForm& snf, const IntVec& x) {
    if (int(x.size()) != snf.U.cols()) throw DimensionError("vector dimension mismatch");
    IntVec ux = snf.U.mul(x);
    IntVec lab(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        lab[i] = mod_floor(ux[i], snf.S.at(int(i), int(i)));
    }
    return lab;
}

IntVec DigitSet::label(const IntVec& x) const { return residue_label(snf_, x); }

const IntVec& DigitSet::digit_for(const IntVec& x) const {
    auto it = by_label_.find(label(x));
    if (it == by_label_.end()) throw ResidueSystemError("residue label missing from digit index");
    return digits_[size_t(it->second)];
}

std::pair<IntVec, IntVec> DigitSet::divide(const IntVec& x) const {
    const IntVec& r = digit_for(x);
    IntVec y = adj_.mul(x - r);
    for (Int& c : y) {
        Int quot, rem;
        mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), det_.get_mpz_t());
        if (rem != 0) throw ResidueSystemError("Euclidean step produced a non-integral quotient");
        c = quot;
    }
    return {y, r};
}

bool DigitSet::contains(const IntVec& d) const {
    if (int(d.size()) != n()) return false;
    return digit_for(d) == d;
}

DigitSet digit_set(const IntMatrix& A, DigitConvention conv) {
    DigitSet ds;
    ds.A_ = A;
    ds.det_ = det(A);
    if (ds.det_ == 0) throw SingularMatrixError("digit construction requires det != 0");
    ds.q_ = abs(ds.det_);
    ds.adj_ = adjugate(A);
    ds.convention_ = conv;
    ds.snf_ = smith_normal_form(A);

    DigitConvention pool =
        (conv == DigitConvention::Canonical) ? DigitConvention::Canonical : conv;
    std::vector<IntVec> candidates = box_lattice_points(A, pool);

    std::map<IntVec, std::vector<IntVec>> classes;
    for (const IntVec& c : candidates) {
        classes[residue_label(ds.snf_, c)].push_back(c);
    }

    if (Int(long(classes.size())) != ds.q_) {
        throw ResidueSystemError("candidate enumeration does not cover every residue class");
    }

    for (const auto& [lab, members] : classes) {
        if (conv != DigitConvention::Canonical && members.size() != 1) {
            throw ResidueSystemError("half-open box produced a non-unique class representative");
        }
        IntVec best = members.front();
        for (const IntVec& m : members) {
            if (lex_less(m, best)) best = m;
        }
        ds.digits_.push_back(best);
    }
    std::sort(ds.digits_.begin(), ds.digits_.end(), lex_less);

    for (int i = 0; i < int(ds.digits_.size()); ++i) {
        ds.by_label_[residue_label(ds.snf_, ds.digits_[size_t(i)])] = i;
    }
    if (ds.by_label_.size() != ds.digits_.size()) {
        throw ResidueSystemError("digits are not pairwise incongruent");
    }

    IntVec zero(size_t(A.rows()), Int(0));
    if (!std::binary_search(ds.digits_.begin(), ds.digits_.end(), zero, lex_less)) {
        throw ResidueSystemError("zero vector missing from digit set");
    }
    return ds;
}

}  // namespace mns
