#include "mns/representation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>

#include "mns/errors.hpp"

namespace mns {

namespace {

IntVec zero_vec(int n) { return IntVec(static_cast<std::size_t>(n), Int(0)); }

/// Rotate a cycle in place so its lexicographically smallest element comes
/// first.  Successor order is preserved: step_digits[i] stays the digit of
/// the Euclidean step leaving elements[i].
void rotate_to_representative(Cycle& c) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < c.elements.size(); ++i) {
        if (lex_less(c.elements[i], c.elements[best])) best = i;
    }
    if (best == 0) return;
    std::rotate(c.elements.begin(), c.elements.begin() + static_cast<std::ptrdiff_t>(best),
                c.elements.end());
    std::rotate(c.step_digits.begin(), c.step_digits.begin() + static_cast<std::ptrdiff_t>(best),
                c.step_digits.end());
}

/// Map every cycle element to (cycle index, position within the cycle).
std::map<IntVec, std::pair<int, int>> cycle_positions(const PseudodigitTable& table) {
    std::map<IntVec, std::pair<int, int>> index;
    for (std::size_t ci = 0; ci < table.cycles.size(); ++ci) {
        const Cycle& c = table.cycles[ci];
        for (std::size_t k = 0; k < c.elements.size(); ++k) {
            index.emplace(c.elements[k], std::make_pair(static_cast<int>(ci), static_cast<int>(k)));
        }
    }
    return index;
}

std::uint64_t default_step_budget(const PseudodigitTable& table, const IntVec& x) {
    std::uint64_t bits = 0;
    for (const Int& v : x) bits += mpz_sizeinbase(v.get_mpz_t(), 2);
    return 10 * (static_cast<std::uint64_t>(table.search_points.size()) + 64) + 2048 * (bits + 4);
}

}  // namespace

OrbitTrace orbit(const DigitSet& ds, const IntVec& x, std::uint64_t max_steps) {
    if (static_cast<int>(x.size()) != ds.n()) throw DimensionError("orbit: vector size mismatch");
    if (max_steps == 0) throw DimensionError("orbit: max_steps must be positive");
    OrbitTrace tr;
    tr.states.push_back(x);
    std::map<IntVec, int> seen;
    seen.emplace(x, 0);
    IntVec cur = x;
    while (true) {
        if (is_zero(cur)) {
            tr.outcome = OrbitOutcome::TerminatedAtZero;
            return tr;
        }
        if (tr.digits.size() >= max_steps) throw OrbitBudgetError("orbit: step budget exhausted");
        auto [y, r] = ds.divide(cur);
        tr.digits.push_back(r);
        tr.states.push_back(y);
        auto it = seen.find(y);
        if (it != seen.end()) {
            tr.outcome = OrbitOutcome::EnteredCycle;
            tr.entry_index = it->second;
            return tr;
        }
        seen.emplace(y, static_cast<int>(tr.states.size()) - 1);
        cur = std::move(y);
    }
}

/// Bijective encoding of the bounding box of the search region into uint64
/// keys, when the box is small enough. Orbits that start inside the region
/// stay inside it (the ball-absorption bound behind R_upper), so every state
/// met during resolution is encodable; leaving the box would falsify the
/// certificate and is reported as an inconsistency.
struct BoxPacker {
    bool usable = false;
    long lo = 0;
    unsigned bits = 0;
    int n = 0;

    static BoxPacker build(const std::vector<IntVec>& pts, int n) {
        BoxPacker p;
        p.n = n;
        if (pts.empty()) return p;
        Int min_c = pts.front().front();
        Int max_c = min_c;
        for (const IntVec& v : pts) {
            for (const Int& x : v) {
                if (x < min_c) min_c = x;
                if (x > max_c) max_c = x;
            }
        }
        if (!min_c.fits_slong_p() || !max_c.fits_slong_p()) return p;
        const Int span = max_c - min_c + 1;
        unsigned bits = 1;
        while ((Int(1) << bits) < span) ++bits;
        if (static_cast<unsigned>(n) * bits > 63) return p;
        p.usable = true;
        p.lo = min_c.get_si();
        p.bits = bits;
        return p;
    }

    bool encode(const IntVec& v, std::uint64_t& key) const {
        key = 0;
        const std::uint64_t mask = (std::uint64_t(1) << bits) - 1;
        for (int i = 0; i < n; ++i) {
            const Int& x = v[static_cast<std::size_t>(i)];
            if (!x.fits_slong_p()) return false;
            const long c = x.get_si();
            if (c < lo) return false;
            const std::uint64_t off = static_cast<std::uint64_t>(c - lo);
            if (off > mask) return false;
            key |= off << (static_cast<unsigned>(i) * bits);
        }
        return true;
    }
};

/// Resolves the orbit of every search point to "reaches 0" or "reaches cycle
/// k", memoizing across points through `state`: value -1 = radix, >= 0 =
/// cycle id (discovery order), <= -2 = on the current path at index
/// (-2 - value). KeyFn maps a state vector to the map's key type; it returns
/// false only when the vector escapes the certified region.
template <typename Map, typename KeyFn>
std::vector<Cycle> resolve_orbits(const DigitSet& ds, const std::vector<IntVec>& pts, Map& state,
                                  KeyFn key_of) {
    using KeyType = typename Map::key_type;
    std::vector<Cycle> found;
    const std::uint64_t budget = 10 * (static_cast<std::uint64_t>(pts.size()) + 8);

    std::vector<IntVec> path;
    std::vector<IntVec> path_digits;
    std::vector<KeyType> path_keys;
    for (const IntVec& start : pts) {
        path.clear();
        path_digits.clear();
        path_keys.clear();
        IntVec cur = start;
        KeyType cur_key;
        if (!key_of(cur, cur_key)) {
            throw InconsistencyError("pseudodigits: orbit state escaped the certified ball");
        }
        int resolution = -1;
        while (true) {
            auto it = state.find(cur_key);
            if (it != state.end()) {
                if (it->second >= -1) {
                    resolution = it->second;
                    break;
                }
                Cycle c;
                for (std::size_t i = static_cast<std::size_t>(-2 - it->second); i < path.size();
                     ++i) {
                    c.elements.push_back(path[i]);
                    c.step_digits.push_back(path_digits[i]);
                }
                rotate_to_representative(c);
                resolution = static_cast<int>(found.size());
                found.push_back(std::move(c));
                break;
            }
            if (path.size() >= budget) throw OrbitBudgetError("pseudodigits: step budget exhausted");
            state.emplace(cur_key, -2 - static_cast<int>(path.size()));
            path.push_back(cur);
            path_keys.push_back(cur_key);
            auto [y, r] = ds.divide(cur);
            path_digits.push_back(std::move(r));
            cur = std::move(y);
            if (!key_of(cur, cur_key)) {
                throw InconsistencyError("pseudodigits: orbit state escaped the certified ball");
            }
        }
        for (const KeyType& k : path_keys) state[k] = resolution;
    }
    return found;
}

PseudodigitTable pseudodigits(const DigitSet& ds, const BoundsReport& br) {
    PseudodigitTable table;
    table.ball_radius_used = br.R_upper;
    table.search_points = enumerate_ellipsoid(br.gram, br.R_upper * br.R_upper);

    const IntVec zero = zero_vec(ds.n());
    std::vector<Cycle> found;
    const BoxPacker packer = BoxPacker::build(table.search_points, ds.n());
    if (packer.usable) {
        std::unordered_map<std::uint64_t, int> state;
        state.reserve(table.search_points.size() * 2);
        std::uint64_t zero_key = 0;
        packer.encode(zero, zero_key);
        state.emplace(zero_key, -1);
        found = resolve_orbits(ds, table.search_points, state,
                               [&packer](const IntVec& v, std::uint64_t& key) {
                                   return packer.encode(v, key);
                               });
    } else {
        std::map<IntVec, int> state;
        state.emplace(zero, -1);
        found = resolve_orbits(ds, table.search_points, state,
                               [](const IntVec& v, IntVec& key) {
                                   key = v;
                                   return true;
                               });
    }

    std::sort(found.begin(), found.end(), [](const Cycle& a, const Cycle& b) {
        return lex_less(a.representative(), b.representative());
    });
    table.cycles = std::move(found);
    for (const Cycle& c : table.cycles) table.S.push_back(c.representative());
    return table;
}

bool yields_radix(const PseudodigitTable& table) { return table.cycles.empty(); }

Representation represent(const DigitSet& ds, const PseudodigitTable& table, const IntVec& x,
                         std::uint64_t max_steps) {
    if (static_cast<int>(x.size()) != ds.n()) throw DimensionError("represent: vector size mismatch");
    const auto index = cycle_positions(table);
    const std::uint64_t budget = max_steps != 0 ? max_steps : default_step_budget(table, x);

    Representation rep;
    IntVec cur = x;
    while (true) {
        if (is_zero(cur)) {
            rep.kind = RepKind::Radix;
            while (rep.digits.size() > 1 && is_zero(rep.digits.back())) rep.digits.pop_back();
            if (rep.digits.empty()) rep.digits.push_back(zero_vec(ds.n()));
            return rep;
        }
        auto it = index.find(cur);
        if (it != index.end()) {
            const Cycle& c = table.cycles[static_cast<std::size_t>(it->second.first)];
            int pos = it->second.second;
            while (pos != 0) {
                rep.digits.push_back(c.step_digits[static_cast<std::size_t>(pos)]);
                pos = (pos + 1) % c.length();
            }
            rep.kind = RepKind::Pseudo;
            rep.pseudodigit = c.representative();
            return rep;
        }
        if (rep.digits.size() >= budget) throw OrbitBudgetError("represent: step budget exhausted");
        auto [y, r] = ds.divide(cur);
        rep.digits.push_back(std::move(r));
        cur = std::move(y);
    }
}

IntVec evaluate(const DigitSet& ds, const Representation& rep) {
    const int n = ds.n();
    for (const IntVec& d : rep.digits) {
        if (static_cast<int>(d.size()) != n) throw DimensionError("evaluate: digit size mismatch");
        if (!ds.contains(d)) throw ValidationError("evaluate: digit not in the digit set");
    }
    IntVec v;
    if (rep.kind == RepKind::Pseudo) {
        if (!rep.pseudodigit) throw ValidationError("evaluate: pseudodigit representation lacks s");
        if (static_cast<int>(rep.pseudodigit->size()) != n) {
            throw DimensionError("evaluate: pseudodigit size mismatch");
        }
        v = *rep.pseudodigit;
    } else {
        if (rep.digits.empty()) throw ValidationError("evaluate: radix representation needs a digit");
        v = zero_vec(n);
    }
    for (std::size_t j = rep.digits.size(); j-- > 0;) {
        v = ds.A().mul(v) + rep.digits[j];
    }
    return v;
}

Classification classify(const DigitSet& ds, const PseudodigitTable& table, const IntVec& x,
                        std::uint64_t max_steps) {
    if (static_cast<int>(x.size()) != ds.n()) throw DimensionError("classify: vector size mismatch");
    const auto index = cycle_positions(table);
    const std::uint64_t budget = max_steps != 0 ? max_steps : default_step_budget(table, x);

    IntVec cur = x;
    std::uint64_t steps = 0;
    while (true) {
        if (is_zero(cur)) return Classification{RepKind::Radix, std::nullopt};
        auto it = index.find(cur);
        if (it != index.end()) {
            const Cycle& c = table.cycles[static_cast<std::size_t>(it->second.first)];
            return Classification{RepKind::Pseudo, c.representative()};
        }
        if (steps >= budget) throw OrbitBudgetError("classify: step budget exhausted");
        ++steps;
        cur = ds.divide(cur).first;
    }
}

namespace {

struct EllipsoidSearch {
    const LdlResult& ldl;
    int n;
    std::vector<Int> z;  // z[k] = x[n-1-k]
    std::vector<IntVec> out;

    void descend(int i, const Rat& rem) {
        // Shifted coordinate y_i = z_i + sum_{j>i} L(j,i) z_j satisfies
        // d_i y_i^2 <= rem; the bracket below rounds outward so no solution
        // is lost, and the exact remainder test discards the excess.
        Rat ci(0);
        for (int j = i + 1; j < n; ++j) ci += ldl.L.at(j, i) * z[static_cast<std::size_t>(j)];
        const Rat bound = sqrt_ub(rem / ldl.d[static_cast<std::size_t>(i)]);
        Int lo = ceil_rat(-bound - ci);
        const Int hi = floor_rat(bound - ci);
        for (Int zi = lo; zi <= hi; ++zi) {
            const Rat yi = Rat(zi) + ci;
            const Rat next = rem - ldl.d[static_cast<std::size_t>(i)] * yi * yi;
            if (next < 0) continue;
            z[static_cast<std::size_t>(i)] = zi;
            if (i == 0) {
                IntVec x(static_cast<std::size_t>(n));
                for (int k = 0; k < n; ++k) x[static_cast<std::size_t>(k)] = z[static_cast<std::size_t>(n - 1 - k)];
                out.push_back(std::move(x));
            } else {
                descend(i - 1, next);
            }
        }
    }
};

}  // namespace

std::vector<IntVec> enumerate_ellipsoid(const RatMatrix& W, const Rat& c) {
    if (W.rows() != W.cols()) throw DimensionError("enumerate_ellipsoid: square matrix required");
    if (!is_symmetric(W)) throw DimensionError("enumerate_ellipsoid: symmetric matrix required");
    const int n = W.rows();

    // Scale the form to integer entries: x^T (s W) x is then an integer, so
    // the threshold s*c can be floored exactly. The coordinate order is also
    // reversed (z_k = x_{n-1-k}); descending from the last z level then
    // emits points in lexicographic x order, so no final sort is needed.
    Int s(1);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const Int den = W.at(i, j).get_den();
            mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), den.get_mpz_t());
        }
    }
    RatMatrix scaled(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) scaled.at(i, j) = W.at(n - 1 - i, n - 1 - j) * Rat(s);
    }
    auto ldl = ldl_decompose(scaled);
    if (!ldl) throw DimensionError("enumerate_ellipsoid: positive definite matrix required");
    if (c < 0) return {};
    const Rat threshold(floor_rat(Rat(s) * c));

    Int size_estimate(1);
    for (int i = 0; i < n; ++i) {
        const Rat bound = sqrt_ub(threshold / ldl->d[static_cast<std::size_t>(i)]);
        size_estimate *= 2 * floor_rat(bound) + 1;
        if (size_estimate > 50000000) {
            throw OrbitBudgetError("enumerate_ellipsoid: search region too large");
        }
    }

    EllipsoidSearch search{*ldl, n, std::vector<Int>(static_cast<std::size_t>(n)), {}};
    search.descend(n - 1, threshold);
    return search.out;
}

std::vector<IntVec> enumerate_l2_ball(int n, const Rat& radius) {
    if (n < 1) throw DimensionError("enumerate_l2_ball: dimension must be positive");
    if (radius < 0) return {};
    return enumerate_ellipsoid(RatMatrix::identity(n), radius * radius);
}

Atlas atlas(const DigitSet& ds, const PseudodigitTable& table, int n_max) {
    if (n_max < 0) throw DimensionError("atlas: n_max must be non-negative");
    const auto& D = ds.digits();
    const Int q(static_cast<long>(D.size()));

    Int radix_count(1);
    for (int j = 0; j <= n_max; ++j) {
        radix_count *= q;
        if (radix_count > (1 << 22)) throw OrbitBudgetError("atlas: digit-string budget exhausted");
    }

    Atlas out;
    const std::size_t qs = D.size();
    const std::size_t len = static_cast<std::size_t>(n_max) + 1;

    // All radix strings d_0 .. d_{n_max}; the odometer steps d_0 fastest.
    {
        std::set<IntVec> pts;
        std::vector<std::size_t> idx(len, 0);
        while (true) {
            IntVec v = zero_vec(ds.n());
            for (std::size_t j = len; j-- > 0;) v = ds.A().mul(v) + D[idx[j]];
            pts.insert(std::move(v));
            std::size_t k = 0;
            while (k < len && ++idx[k] == qs) idx[k++] = 0;
            if (k == len) break;
        }
        out.radix_points.assign(pts.begin(), pts.end());
    }

    std::set<IntVec> pseudo_pts;
    for (int N = 0; N <= n_max; ++N) {
        const std::size_t slen = static_cast<std::size_t>(N);
        for (const IntVec& s : table.S) {
            std::vector<std::size_t> idx(slen, 0);
            while (true) {
                PseudoAtlasEntry e;
                e.N = N;
                e.s = s;
                IntVec v = s;
                for (std::size_t j = slen; j-- > 0;) {
                    v = ds.A().mul(v) + D[idx[j]];
                    e.digits.push_back(D[idx[j]]);
                }
                std::reverse(e.digits.begin(), e.digits.end());
                e.point = v;
                pseudo_pts.insert(std::move(v));
                out.pseudo_entries.push_back(std::move(e));
                if (slen == 0) break;
                std::size_t k = 0;
                while (k < slen && ++idx[k] == qs) idx[k++] = 0;
                if (k == slen) break;
            }
        }
    }
    std::sort(out.pseudo_entries.begin(), out.pseudo_entries.end(),
              [](const PseudoAtlasEntry& a, const PseudoAtlasEntry& b) {
                  if (a.point != b.point) return lex_less(a.point, b.point);
                  if (a.N != b.N) return a.N < b.N;
                  if (a.s != b.s) return lex_less(a.s, b.s);
                  return std::lexicographical_compare(a.digits.begin(), a.digits.end(),
                                                      b.digits.begin(), b.digits.end(), lex_less);
              });
    out.pseudo_points.assign(pseudo_pts.begin(), pseudo_pts.end());
    return out;
}

}  // namespace mns
