#pragma once

#include <vector>

#include "mns/numeric.hpp"

namespace mns {

/// Rational polynomial, little-endian coefficients (c[i] multiplies z^i).
/// Normalized: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient vector and degree -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(RatVec coeffs);
    static RatPoly from_int(const std::vector<Int>& coeffs);

    int degree() const { return int(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    const Rat& operator[](int i) const { return c_[size_t(i)]; }
    const RatVec& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;
    RatPoly derivative() const;
    /// Coefficient reversal: z^deg * p(1/z).
    RatPoly reversed() const;
    /// Divide by the leading coefficient.
    RatPoly monic() const;

    bool operator==(const RatPoly& o) const = default;

private:
    RatVec c_;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rat& s, const RatPoly& a);

/// Euclidean division: a = q*b + r with deg r < deg b.
struct PolyDivMod {
    RatPoly quotient;
    RatPoly remainder;
};
PolyDivMod divmod(const RatPoly& a, const RatPoly& b);

/// Monic greatest common divisor.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

/// p with repeated roots collapsed: p / gcd(p, p').
RatPoly squarefree_part(const RatPoly& p);

/// Sturm chain of a squarefree polynomial.
class SturmChain {
public:
    explicit SturmChain(const RatPoly& squarefree);
    /// Number of distinct real roots in the half-open interval (a, b].
    int count_roots(const Rat& a, const Rat& b) const;
    int sign_variations(const Rat& x) const;

private:
    std::vector<RatPoly> seq_;
};

/// Number of distinct real roots of p (not necessarily squarefree) in (a, b].
int count_real_roots(const RatPoly& p, const Rat& a, const Rat& b);

/// All rational roots with multiplicities, by exhaustive divisor search over
/// the primitive integer form (rational root theorem).
std::vector<std::pair<Rat, int>> rational_roots(const RatPoly& p);

/// True when every root of p lies strictly inside the unit circle.
/// Exact Schur-Cohn/Jury reduction: with a_0 the constant and a_d the leading
/// coefficient, p is Schur iff a_0^2 < a_d^2 and (a_d*p - a_0*p*)/z is Schur.
bool schur_stable(const RatPoly& p);

/// True when some root of p has modulus exactly one. Exact: checks z = +-1,
/// then reduces gcd(p, p*) to a palindromic factor and counts the real roots
/// of its Chebyshev-style transform inside (-2, 2) by Sturm sequences.
bool has_root_on_unit_circle(const RatPoly& p);

}  // namespace mns
