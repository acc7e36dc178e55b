#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mns/matrix.hpp"

namespace mns {

/// Which box generates the digit candidates.
///
/// Canonical enumerates the integer points of the closed image
/// A([-1/2, 1/2]^n) and keeps the lexicographically smallest member of each
/// residue class; boundary classes therefore get a deterministic
/// representative. LowerHalfOpen and UpperHalfOpen apply the half-open
/// membership test literally (exactly one candidate per class).
enum class DigitConvention { Canonical, LowerHalfOpen, UpperHalfOpen };

std::string convention_name(DigitConvention conv);

/// Componentwise box membership for t = A^-1 d (exact rational comparisons).
bool in_box(const RatVec& t, DigitConvention conv);

/// Integer points x with A^-1 x in the convention's box.
std::vector<IntVec> box_lattice_points(const IntMatrix& A, DigitConvention conv);

IntVec residue_label(const SmithForm& snf, const IntVec& x);

class DigitSet {
public:
    const IntMatrix& A() const { return A_; }
    int n() const { return A_.rows(); }
    const Int& q() const { return q_; }
    DigitConvention convention() const { return convention_; }
    const std::vector<IntVec>& digits() const { return digits_; }
    const SmithForm& snf() const { return snf_; }

    IntVec label(const IntVec& x) const;
    /// The unique digit congruent to x mod A(Z^n).
    const IntVec& digit_for(const IntVec& x) const;
    /// Euclidean step: returns (y, r) with x = A*y + r and r a digit.
    std::pair<IntVec, IntVec> divide(const IntVec& x) const;
    bool contains(const IntVec& d) const;

private:
    friend DigitSet digit_set(const IntMatrix& A, DigitConvention conv);

    IntMatrix A_;
    IntMatrix adj_;
    Int det_;
    Int q_;
    DigitConvention convention_ = DigitConvention::Canonical;
    SmithForm snf_;
    std::vector<IntVec> digits_;
    std::map<IntVec, int> by_label_;
};

DigitSet digit_set(const IntMatrix& A, DigitConvention conv = DigitConvention::Canonical);

}  // namespace mns
