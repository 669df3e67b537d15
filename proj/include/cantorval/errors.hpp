#pragma once

#include <stdexcept>
#include <string>

namespace cantorval {

// Base for all domain errors thrown by this library.  CLI maps subclasses to
// exit codes: input/validation -> 2, budget -> 3, inapplicable certificate -> 4.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A block term was zero or negative.
struct NonPositiveTerm : Error {
    using Error::Error;
};

// The ratio q fell outside the open interval (0, 1/2).
struct RatioOutOfRange : Error {
    using Error::Error;
};

// A scale factor produced non-integer block terms.
struct NonIntegralScale : Error {
    using Error::Error;
};

// The block's subset-sum set has no positive run, so no interior window exists.
struct NoPositiveRun : Error {
    using Error::Error;
};

// Two applicable rules produced contradictory verdicts.  Always a bug.
struct InternalInconsistency : Error {
    using Error::Error;
};

// A computation would exceed the configured point budget.  `depth` is the
// smallest refinement depth whose cover cannot be built within budget.
struct BudgetExceeded : Error {
    int depth;
    BudgetExceeded(int d, const std::string& msg) : Error(msg), depth(d) {}
};

// A hard cap was exceeded (for example the truncation-oracle term count).
struct CapExceeded : Error {
    using Error::Error;
};

// The digit-certificate grid walk failed to represent a grid point.  The
// underlying construction admits every grid point, so this signals a bug.
struct DigitGapFailure : Error {
    using Error::Error;
};

// A certificate was requested for parameters it does not apply to.
struct InapplicableCertificate : Error {
    using Error::Error;
};

} // namespace cantorval
