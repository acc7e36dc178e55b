#include "mns/polynomial.hpp"

#include <algorithm>

#include "mns/errors.hpp"

namespace mns {

RatPoly::RatPoly(RatVec coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::from_int(const std::vector<Int>& coeffs) {
    RatVec c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = Rat(coeffs[i]);
    return RatPoly(std::move(c));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    RatVec d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(long(i)) * c_[i];
    return RatPoly(std::move(d));
}

RatPoly RatPoly::reversed() const {
    RatVec r(c_.rbegin(), c_.rend());
    return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const {
    if (zero()) return *this;
    Rat lead = c_.back();
    RatVec m(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) m[i] = c_[i] / lead;
    return RatPoly(std::move(m));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    RatVec c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    RatVec c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b.coeffs()[i];
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.zero() || b.zero()) return RatPoly();
    RatVec c(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return RatPoly(std::move(c));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
    RatVec c(a.coeffs());
    for (auto& e : c) e *= s;
    return RatPoly(std::move(c));
}

PolyDivMod divmod(const RatPoly& a, const RatPoly& b) {
    if (b.zero()) throw DimensionError("divmod: division by zero polynomial");
    RatVec rem(a.coeffs());
    int db = b.degree();
    if (int(rem.size()) - 1 < db) return {RatPoly(), a};
    RatVec quot(rem.size() - size_t(db), Rat(0));
    const Rat& lead = b[db];
    for (int i = int(rem.size()) - 1; i >= db; --i) {
        if (rem[size_t(i)] == 0) continue;
        Rat f = rem[size_t(i)] / lead;
        quot[size_t(i - db)] = f;
        for (int j = 0; j <= db; ++j) rem[size_t(i - db + j)] -= f * b[j];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.zero()) {
        RatPoly r = divmod(x, y).remainder;
        x = y;
        y = r;
    }
    return x.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.degree() <= 1) return p;
    RatPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return divmod(p, g).quotient;
}

SturmChain::SturmChain(const RatPoly& p) {
    seq_.push_back(p);
    if (p.degree() >= 1) {
        seq_.push_back(p.derivative());
        while (seq_.back().degree() >= 1) {
            RatPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).remainder;
            if (r.zero()) break;
            seq_.push_back(Rat(-1) * r);
        }
    }
}

int SturmChain::sign_variations(const Rat& x) const {
    int vars = 0;
    int prev = 0;
    for (const auto& p : seq_) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
    return sign_variations(a) - sign_variations(b);
}

int count_real_roots(const RatPoly& p, const Rat& a, const Rat& b) {
    if (p.zero()) throw DimensionError("count_real_roots: zero polynomial");
    SturmChain chain(squarefree_part(p));
    return chain.count_roots(a, b);
}

std::vector<std::pair<Rat, int>> rational_roots(const RatPoly& p) {
    std::vector<std::pair<Rat, int>> out;
    if (p.degree() < 1) return out;
    // primitive integer form
    Int den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        Int d = c.get_den();
        den_lcm = lcm(den_lcm, d);
    }
    std::vector<Int> ic(p.coeffs().size());
    for (size_t i = 0; i < ic.size(); ++i) {
        Rat scaled = p.coeffs()[i] * Rat(den_lcm);
        ic[i] = scaled.get_num();
    }
    // strip zero roots
    RatPoly work = p;
    int zero_mult = 0;
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    zero_mult = int(low);
    if (zero_mult > 0) out.emplace_back(Rat(0), zero_mult);

    Int a0 = ic[low];
    Int an = ic.back();
    auto divisors = [](Int v) {
        v = abs(v);
        std::vector<Int> ds;
        for (Int d = 1; d * d <= v; ++d) {
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        }
        return ds;
    };
    auto ps = divisors(a0);
    auto qs = divisors(an);
    std::vector<Rat> candidates;
    for (const auto& pp : ps)
        for (const auto& qq : qs) {
            Rat r(pp, qq);
            r.canonicalize();
            candidates.push_back(r);
            candidates.push_back(-r);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& cand : candidates) {
        if (work.eval(cand) != 0) continue;
        int mult = 0;
        RatPoly lin(RatVec{-cand, Rat(1)});
        while (true) {
            auto dm = divmod(work, lin);
            if (!dm.remainder.zero()) break;
            work = dm.quotient;
            ++mult;
        }
        if (mult > 0) out.emplace_back(cand, mult);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool schur_stable(const RatPoly& p) {
    if (p.zero()) throw DimensionError("schur_stable: zero polynomial");
    RatPoly cur = p;
    while (cur.degree() > 0) {
        const Rat& a0 = cur[0];
        const Rat& ad = cur[cur.degree()];
        if (a0 * a0 >= ad * ad) return false;
        // (ad*p - a0*p*)/z, degree drops by one, leading coeff ad^2 - a0^2 > 0
        RatPoly combo = ad * cur - a0 * cur.reversed();
        RatVec shifted(combo.coeffs().begin() + 1, combo.coeffs().end());
        cur = RatPoly(std::move(shifted));
    }
    return true;
}

bool has_root_on_unit_circle(const RatPoly& p) {
    if (p.zero()) throw DimensionError("has_root_on_unit_circle: zero polynomial");
    if (p.eval(Rat(1)) == 0 || p.eval(Rat(-1)) == 0) return true;
    if (p.degree() < 2) return false;
    // roots on the circle are common roots of p and its reversal
    RatPoly g = poly_gcd(p, p.reversed());
    if (g.degree() < 1) return false;
    RatPoly lin_p(RatVec{Rat(-1), Rat(1)});   // z - 1
    RatPoly lin_m(RatVec{Rat(1), Rat(1)});    // z + 1
    while (g.degree() >= 1 && g.eval(Rat(1)) == 0) g = divmod(g, lin_p).quotient;
    while (g.degree() >= 1 && g.eval(Rat(-1)) == 0) g = divmod(g, lin_m).quotient;
    if (g.degree() < 1) return false;
    // g is now palindromic of even degree 2m (self-inversive, no +-1 roots);
    // substitute t = z + 1/z:  g(z)/z^m = c_m + sum_k c_{m+k} (z^k + z^{-k})
    int m = g.degree() / 2;
    // z^k + z^{-k} as polynomial in t: P_0 = 2, P_1 = t, P_{k+1} = t P_k - P_{k-1}
    RatPoly t_poly(RatVec{Rat(0), Rat(1)});
    RatPoly pk_prev(RatVec{Rat(2)});
    RatPoly pk = t_poly;
    RatPoly h = g[m] * RatPoly(RatVec{Rat(1)});
    for (int k = 1; k <= m; ++k) {
        h = h + g[m + k] * pk;
        RatPoly next = t_poly * pk - pk_prev;
        pk_prev = pk;
        pk = next;
    }
    if (h.zero()) throw InconsistencyError("unit-circle reduction produced zero polynomial");
    // unit-circle roots (other than +-1) correspond to t strictly inside (-2, 2)
    SturmChain chain(squarefree_part(h));
    Rat two(2);
    int inside = chain.count_roots(-two, two);
    if (h.eval(two) == 0) inside -= 1;
    return inside > 0;
}

}  // namespace mns
