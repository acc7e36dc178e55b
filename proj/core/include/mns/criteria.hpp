#pragma once

#include <string>
#include <vector>

#include "mns/spectral.hpp"

namespace mns {

enum class Verdict { GuaranteedRadix, Inconclusive };

std::string verdict_name(Verdict v);

/// All decisions are exact; the mu tests are strict, so a boundary value
/// (mu equal to the threshold) reports false.
struct ConditionReport {
    bool is_dilation = false;
    bool mu_gt_2sqrtn = false;
    bool mu_gt_2 = false;
    bool jeong_C_in_AU = false;
    bool jeong_C_in_AF = false;
    Verdict verdict = Verdict::Inconclusive;
};

/// Singular A is reported as not a dilation with both membership tests
/// false (there is no inverse to test against).
ConditionReport check_conditions(const IntMatrix& A);

enum class MuThreshold { MuGt2, MuGt2SqrtN };

std::string threshold_name(MuThreshold t);

struct PowerResult {
    int beta = 1;
    MuThreshold threshold = MuThreshold::MuGt2;
    SpectralCert certificate;        // certificate for A^beta
    std::vector<SigmaBounds> trace;  // sigma bounds of A^1 .. A^beta
};

/// Smallest beta <= beta_max such that mu(A^beta) strictly exceeds the
/// threshold; exact integer powers throughout. Requires a dilation matrix.
PowerResult find_power(const IntMatrix& A, MuThreshold threshold, int beta_max = 64);

struct CrossValidation {
    ConditionReport report;
    bool yields_radix = false;
    bool consistent = false;
};

/// Runs the full pipeline (digit set, norm bounds, pseudodigit search) and
/// checks the one implication the theory promises: a GuaranteedRadix verdict
/// must come with an empty pseudodigit set. A violation is fatal.
CrossValidation cross_validate(const IntMatrix& A);

/// The consistency check alone, for callers that already hold both sides.
CrossValidation cross_validate_with(const ConditionReport& report, bool yields);

}  // namespace mns
