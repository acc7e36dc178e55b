#include "mns/criteria.hpp"

#include "mns/digits.hpp"
#include "mns/errors.hpp"
#include "mns/norms.hpp"
#include "mns/representation.hpp"

namespace mns {

std::string verdict_name(Verdict v) {
    return v == Verdict::GuaranteedRadix ? "guaranteed_radix" : "inconclusive";
}

std::string threshold_name(MuThreshold t) {
    return t == MuThreshold::MuGt2 ? "mu_gt_2" : "mu_gt_2sqrtn";
}

ConditionReport check_conditions(const IntMatrix& A) {
    if (A.rows() != A.cols() || A.rows() == 0) {
        throw DimensionError("check_conditions: square matrix required");
    }
    const int n = A.rows();
    ConditionReport rep;
    rep.is_dilation = verify_dilation(A);
    rep.mu_gt_2 = mu_exceeds(A, Rat(4));
    rep.mu_gt_2sqrtn = mu_exceeds(A, Rat(4 * n));

    if (det(A) != 0) {
        const RatMatrix Ainv = inverse(A);
        // C = {0, +-e_1, ..., +-e_n}; membership of A^-1 c is tested in both
        // half-open boxes. c = 0 always passes, so only the signed unit
        // vectors can decide.
        rep.jeong_C_in_AU = true;
        rep.jeong_C_in_AF = true;
        for (int i = 0; i < n && (rep.jeong_C_in_AU || rep.jeong_C_in_AF); ++i) {
            for (int sign : {1, -1}) {
                RatVec t(static_cast<std::size_t>(n));
                for (int r = 0; r < n; ++r) t[static_cast<std::size_t>(r)] = sign * Ainv.at(r, i);
                if (!in_box(t, DigitConvention::UpperHalfOpen)) rep.jeong_C_in_AU = false;
                if (!in_box(t, DigitConvention::LowerHalfOpen)) rep.jeong_C_in_AF = false;
            }
        }
    }

    // The second Jeong hypothesis (A^j U exhausts R^n) follows from the
    // dilation property, so it contributes no separate flag.
    if (rep.is_dilation && (rep.mu_gt_2 || rep.jeong_C_in_AU)) {
        rep.verdict = Verdict::GuaranteedRadix;
    }
    return rep;
}

PowerResult find_power(const IntMatrix& A, MuThreshold threshold, int beta_max) {
    if (beta_max < 1) throw DimensionError("find_power: beta_max must be positive");
    if (!verify_dilation(A)) throw NotDilationError("find_power: dilation matrix required");
    const Rat t_squared =
        threshold == MuThreshold::MuGt2 ? Rat(4) : Rat(4 * A.rows());

    PowerResult result;
    result.threshold = threshold;
    IntMatrix power = A;
    for (int beta = 1; beta <= beta_max; ++beta) {
        result.trace.push_back(sigma_bounds(power));
        if (mu_exceeds(power, t_squared)) {
            result.beta = beta;
            result.certificate = spectral_cert(power, {t_squared});
            return result;
        }
        if (beta < beta_max) power = power * A;
    }

    std::string trace_text = "find_power: no power up to beta_max satisfies the threshold;";
    trace_text += " sigma_min lower bounds:";
    for (const SigmaBounds& sb : result.trace) trace_text += " " + rat_string(sb.sigma_min_lb);
    throw OrbitBudgetError(trace_text);
}

CrossValidation cross_validate(const IntMatrix& A) {
    const ConditionReport report = check_conditions(A);
    const DigitSet ds = digit_set(A);
    const NormEvaluator ev = make_norm_evaluator(A);
    const BoundsReport br = bounds_report(ev);
    const PseudodigitTable table = pseudodigits(ds, br);
    return cross_validate_with(report, yields_radix(table));
}

CrossValidation cross_validate_with(const ConditionReport& report, bool yields) {
    CrossValidation cv;
    cv.report = report;
    cv.yields_radix = yields;
    cv.consistent = !(report.verdict == Verdict::GuaranteedRadix && !yields);
    if (!cv.consistent) {
        throw InconsistencyError(
            "cross_validate: GuaranteedRadix verdict with a nonempty pseudodigit set");
    }
    return cv;
}

}  // namespace mns
