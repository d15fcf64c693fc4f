#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polysieve {

// Exact rational carrier. mpq_class keeps values canonical after every
// arithmetic operation, so equality is value equality.
using Rational = mpq_class;
using BigInt = mpz_class;

// Thrown when an input violates the hypotheses of the formula being evaluated.
// The CLI maps it to exit code 2.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline BigInt to_big(std::int64_t v) {
    BigInt r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw domain_error("zero denominator");
    Rational r(to_big(num), to_big(den));
    r.canonicalize();
    return r;
}

// p^e for any integer exponent e (negative gives 1/p^|e|).
inline Rational rpow(std::int64_t p, std::int64_t e) {
    BigInt b;
    mpz_pow_ui(b.get_mpz_t(), to_big(p).get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(b);
    Rational r(BigInt(1), b);
    r.canonicalize();
    return r;
}

inline Rational rpow(const Rational& x, unsigned long e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), x.get_num().get_mpz_t(), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), x.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace polysieve
