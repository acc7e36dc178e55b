#include "mns/numeric.hpp"

#include <sstream>

#include "mns/errors.hpp"

namespace mns {

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

RatInterval sqrt_enclosure(const Rat& x, unsigned prec_bits) {
    if (sgn(x) < 0) throw DimensionError("sqrt_enclosure: negative argument");
    if (sgn(x) == 0) return {Rat(0), Rat(0)};
    // sqrt(p/q) = sqrt(p*q)/q.  Scale by 2^prec to control the width.
    Int scale = Int(1) << prec_bits;
    Int target = x.get_num() * x.get_den() * scale * scale;
    Int root;
    mpz_sqrt(root.get_mpz_t(), target.get_mpz_t());
    Rat den = Rat(x.get_den() * scale);
    Rat lo = Rat(root) / den;
    lo.canonicalize();
    if (root * root == target) return {lo, lo};
    Rat hi = Rat(root + 1) / den;
    hi.canonicalize();
    return {lo, hi};
}

Rat sqrt_lb(const Rat& x, unsigned prec_bits) { return sqrt_enclosure(x, prec_bits).lo; }
Rat sqrt_ub(const Rat& x, unsigned prec_bits) { return sqrt_enclosure(x, prec_bits).hi; }

std::string rat_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator: " + text);
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            size_t frac = text.size() - dot - 1;
            if (frac == 0) throw ParseError("bad decimal literal: " + text);
            Int num(digits);
            Int den = 1;
            for (size_t i = 0; i < frac; ++i) den *= 10;
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        return Rat(Int(text));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + text);
    }
}

std::string decimal_string(const Rat& x, int frac_digits) {
    Int pow10 = 1;
    for (int i = 0; i < frac_digits; ++i) pow10 *= 10;
    // round(x * 10^d), ties away from zero
    Rat scaled = x * Rat(pow10);
    Int twice_num = 2 * scaled.get_num();
    Int n;
    if (sgn(scaled) >= 0)
        mpz_fdiv_q(n.get_mpz_t(), Int(twice_num + scaled.get_den()).get_mpz_t(),
                   Int(2 * scaled.get_den()).get_mpz_t());
    else
        mpz_cdiv_q(n.get_mpz_t(), Int(twice_num - scaled.get_den()).get_mpz_t(),
                   Int(2 * scaled.get_den()).get_mpz_t());
    bool neg = n < 0;
    Int a = abs(n);
    Int ip = a / pow10;
    Int fp = a % pow10;
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (frac_digits > 0) {
        std::string frac = fp.get_str();
        frac.insert(frac.begin(), size_t(frac_digits) - frac.size(), '0');
        out += "." + frac;
    }
    return out;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool is_zero(const IntVec& v) {
    for (const auto& e : v)
        if (e != 0) return false;
    return true;
}

RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

Rat quad_l2(const RatVec& v) {
    Rat s = 0;
    for (const auto& e : v) s += e * e;
    return s;
}

Int quad_l2(const IntVec& v) {
    Int s = 0;
    for (const auto& e : v) s += e * e;
    return s;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

std::string vec_string(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].get_str();
    }
    os << ")";
    return os.str();
}

}  // namespace mns
