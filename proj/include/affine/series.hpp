#pragma once

#include <vector>

#include "affine/numeric.hpp"
#include "affine/qcontext.hpp"

namespace affine {

/// Power series in one variable truncated at a fixed order: coefficients
/// c_0..c_order are stored exactly, everything above is discarded. All
/// operations are exact on the retained coefficients; mixing orders is a
/// programming error and throws.
class Series {
  public:
    explicit Series(int order);
    Series(int order, std::vector<Rational> coeffs);

    static Series one(int order);
    static Series monomial(int order, int degree, const Rational& coeff = Rational(1));
    /// 1/(1-u) truncated: all coefficients 1.
    static Series geometric(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const;
    void set_coeff(int i, Rational v);

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator*(const Rational& s) const;
    Series operator-() const;
    bool operator==(const Series& o) const = default;

    /// Multiplicative inverse; the constant term must be nonzero.
    Series inverse() const;
    Series div(const Series& o) const { return *this * o.inverse(); }

    /// this^e by binary exponentiation, e >= 0 (arbitrary size).
    Series pow(const Integer& e) const;

    /// Argument substitution u -> s*u: coefficient i scaled by s^i.
    Series scale_arg(const Rational& s) const;

    /// Argument substitution u -> u^d (truncated at the same order).
    Series inflate(int d) const;

  private:
    std::vector<Rational> c_;
    void check_same_order(const Series& o) const;
};

/// Expansion of prod_{r>=1}(1 - u/q^r): coefficient of u^i is
/// (-1)^i / ((q^i-1)...(q-1)). Exact.
Series euler_product_series(const QContext& ctx, int order);

}  // namespace affine
