#pragma once

#include <stdexcept>
#include <string>

namespace weylcq {

struct InvalidType : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* Weyl group enumeration would exceed the cap; carries the group order
 * predicted by the closed formula so callers can switch to formula routes. */
struct CapExceeded : std::runtime_error {
    long long estimate;
    explicit CapExceeded(long long est)
        : std::runtime_error("Weyl enumeration would produce " + std::to_string(est) +
                             " elements, over the cap"),
          estimate(est) {}
};

struct GuardExceeded : std::runtime_error {
    long long required;
    long long guard;
    GuardExceeded(long long req, long long g)
        : std::runtime_error("scan of " + std::to_string(req) + " points exceeds guard " +
                             std::to_string(g)),
          required(req),
          guard(g) {}
};

/* Extra interpolation samples did not match the fitted constituent: the data
 * is not a quasi-polynomial of the requested period/degree above validFrom. */
struct OverdeterminationFailure : std::runtime_error {
    int residue;
    long long argument;
    OverdeterminationFailure(int r, long long arg)
        : std::runtime_error("overdetermination check failed at residue " + std::to_string(r) +
                             ", argument " + std::to_string(arg)),
          residue(r),
          argument(arg) {}
};

/* Alcove reduction ran past its step budget; indicates an arithmetic bug,
 * never a valid geometric outcome. */
struct NonTermination : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace weylcq
