#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mns {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Closed rational interval [lo, hi].
struct RatInterval {
    Rat lo;
    Rat hi;
    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

/// Floor of a rational.
Int floor_rat(const Rat& x);

/// Ceiling of a rational.
Int ceil_rat(const Rat& x);

/// Representative of a mod m in [0, m), m > 0.
Int mod_floor(const Int& a, const Int& m);

/// Certified enclosure of sqrt(x) for x >= 0: lo^2 <= x <= hi^2.
/// Exact (lo == hi) whenever x is the square of a rational. The width is at
/// most 1/2^prec_bits divided by the denominator scale.
RatInterval sqrt_enclosure(const Rat& x, unsigned prec_bits = 64);

Rat sqrt_lb(const Rat& x, unsigned prec_bits = 64);
Rat sqrt_ub(const Rat& x, unsigned prec_bits = 64);

/// "p/q" (or "p" when q == 1), canonicalized.
std::string rat_string(const Rat& x);

/// Parse "p", "p/q", or a decimal literal like "-3.25". Throws ParseError.
Rat parse_rat(const std::string& text);

/// Deterministic fixed-point decimal rendering, rounded to `frac_digits`
/// fractional digits (ties away from zero). Never uses floating point.
std::string decimal_string(const Rat& x, int frac_digits = 9);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);
RatVec to_rat(const IntVec& v);

/// Sum of squared entries (the squared l2 norm), exact.
Rat quad_l2(const RatVec& v);
Int quad_l2(const IntVec& v);

/// Lexicographic comparison; the ordering used for all sorted vector output.
bool lex_less(const IntVec& a, const IntVec& b);

std::string vec_string(const IntVec& v);

}  // namespace mns
