#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace affine {

/// Arbitrary-precision integers and rationals. Rationals are kept canonical
/// (coprime numerator/denominator, positive denominator); every arithmetic
/// result out of GMP is canonical, but values assembled from raw parts must
/// go through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a configurable size/enumeration cap is exceeded.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/r" (arbitrary precision, canonicalized).
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) {
        throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    }
    if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    r.canonicalize();
    return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

/// base^e for any integer e; negative exponents invert (base must be nonzero).
inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    bool neg = e < 0;
    unsigned long mag = neg ? static_cast<unsigned long>(-(e + 1)) + 1UL : static_cast<unsigned long>(e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), mag);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), mag);
    if (neg) {
        if (base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
        out = 1 / out;
    }
    return out;
}

inline double to_double(const Rational& r) { return r.get_d(); }

/// "p/r" (or "p" for integers); matches the CLI's exact output format.
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace affine
