#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylcq {

/* All exact arithmetic in the library runs on GMP rationals.  Counting
 * routines use long long and convert at the boundary. */
using Rat = mpq_class;

inline Rat rat(long long num, long long den = 1) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/* Exact integer value; throws if r is not an integer or does not fit. */
inline long long to_int(const Rat& r) {
    if (!is_integer(r))
        throw std::domain_error("rational is not an integer: " + r.get_str());
    const mpz_class& n = r.get_num();
    if (!n.fits_slong_p())
        throw std::overflow_error("integer too large for long long: " + n.get_str());
    return n.get_si();
}

inline Rat rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return Rat(q);
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double to_double(const Rat& r) { return r.get_d(); }

}  // namespace weylcq
