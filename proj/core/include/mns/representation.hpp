#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mns/digits.hpp"
#include "mns/norms.hpp"

namespace mns {

enum class OrbitOutcome { TerminatedAtZero, EnteredCycle };

struct OrbitTrace {
    std::vector<IntVec> states;  // x_0, x_1, ..., x_K
    std::vector<IntVec> digits;  // r_0, ..., r_{K-1}; x_j = A x_{j+1} + r_j
    OrbitOutcome outcome = OrbitOutcome::TerminatedAtZero;
    /// EnteredCycle: index of the first occurrence of the revisited state.
    int entry_index = -1;
};

/// Iterates the Euclidean step from x until it reaches 0 or revisits a state.
OrbitTrace orbit(const DigitSet& ds, const IntVec& x, std::uint64_t max_steps);

struct Cycle {
    /// Successor order, starting at the canonical (lex-smallest) element;
    /// divide(elements[i]) = (elements[(i+1) % len], step_digits[i]).
    std::vector<IntVec> elements;
    std::vector<IntVec> step_digits;
    const IntVec& representative() const { return elements.front(); }
    int length() const { return int(elements.size()); }
};

struct PseudodigitTable {
    std::vector<Cycle> cycles;  // sorted by representative, lexicographically
    std::vector<IntVec> S;      // cycle representatives, sorted
    Rat ball_radius_used;
    /// Every integer point examined: x with x^T W x <= R_upper^2 (sorted).
    std::vector<IntVec> search_points;
};

/// Enumerates the cycle region {x : x^T W x <= R_upper^2} and resolves the
/// orbit of every point, memoizing across start points.
PseudodigitTable pseudodigits(const DigitSet& ds, const BoundsReport& br);

bool yields_radix(const PseudodigitTable& table);

enum class RepKind { Radix, Pseudo };

struct Representation {
    RepKind kind = RepKind::Radix;
    std::vector<IntVec> digits;  // little-endian: digits[j] multiplies A^j
    std::optional<IntVec> pseudodigit;
    /// Radix: x = sum_{j<=N} A^j d_j with N = digits.size() - 1.
    /// Pseudo: x = A^N s + sum_{j<N} A^j d_j with N = digits.size().
    int N() const { return kind == RepKind::Radix ? int(digits.size()) - 1 : int(digits.size()); }
};

Representation represent(const DigitSet& ds, const PseudodigitTable& table, const IntVec& x,
                         std::uint64_t max_steps = 0);

/// Exact Horner evaluation; validates every digit against ds.
IntVec evaluate(const DigitSet& ds, const Representation& rep);

struct Classification {
    RepKind kind = RepKind::Radix;
    std::optional<IntVec> pseudodigit;
};

Classification classify(const DigitSet& ds, const PseudodigitTable& table, const IntVec& x,
                        std::uint64_t max_steps = 0);

/// Integer points with ||x||_2 <= radius, sorted lexicographically.
std::vector<IntVec> enumerate_l2_ball(int n, const Rat& radius);

/// Integer points with x^T W x <= c (W positive definite), sorted.
std::vector<IntVec> enumerate_ellipsoid(const RatMatrix& W, const Rat& c);

struct PseudoAtlasEntry {
    int N = 0;
    IntVec s;
    std::vector<IntVec> digits;  // d_0 .. d_{N-1}
    IntVec point;                // A^N s + sum A^j d_j
};

struct Atlas {
    std::vector<IntVec> radix_points;  // deduplicated, sorted
    std::vector<PseudoAtlasEntry> pseudo_entries;  // one per (N, s, digit string)
    std::vector<IntVec> pseudo_points;             // deduplicated, sorted
};

Atlas atlas(const DigitSet& ds, const PseudodigitTable& table, int n_max);

}  // namespace mns
