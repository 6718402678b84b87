// Certified numerical evaluation of alternating Euler sums and combos.
#pragma once

#include "sozeta/euler_terms.hpp"
#include "sozeta/precision_real.hpp"
#include "sozeta/tails.hpp"

namespace sozeta {

class ConstantCache;

/// sum_{m>=1} sign^m / m^exponent, err <= cfg.reported_err().
PrecisionReal eval_depth1(SignedArg arg, const EvalConfig& cfg = {});

/// Depth one or two; depth two is the outer sum over the inner index of
/// (inner weight) x (tail of the outer series), with the tail expanded
/// asymptotically once the inner index passes the cutoff.
PrecisionReal eval_term(const EulerTerm& term, const EvalConfig& cfg = {});

/// Sum of coefficient x term value. Looks terms up in `cache` when given
/// and stores freshly computed ones there.
PrecisionReal eval_combo(const Combo& c, const EvalConfig& cfg = {}, ConstantCache* cache = nullptr);

/// pi at the working precision of cfg.
PrecisionReal pi_value(const EvalConfig& cfg = {});

/// Default outer cutoff for cfg.
long default_cutoff(const EvalConfig& cfg);

}  // namespace sozeta
