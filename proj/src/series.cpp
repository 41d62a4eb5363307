#include "affine/series.hpp"

#include <stdexcept>

namespace affine {

Series::Series(int order) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
    c_.assign(order + 1, Rational(0));
}

Series::Series(int order, std::vector<Rational> coeffs) : Series(order) {
    if (coeffs.size() > c_.size()) throw std::invalid_argument("Series: too many coefficients");
    for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
}

Series Series::one(int order) {
    Series s(order);
    s.c_[0] = 1;
    return s;
}

Series Series::monomial(int order, int degree, const Rational& coeff) {
    Series s(order);
    if (degree < 0) throw std::invalid_argument("Series::monomial: negative degree");
    if (degree <= order) s.c_[degree] = coeff;
    return s;
}

Series Series::geometric(int order) {
    Series s(order);
    for (auto& c : s.c_) c = 1;
    return s;
}

const Rational& Series::coeff(int i) const {
    if (i < 0 || i > order()) throw std::invalid_argument("Series::coeff: out of range");
    return c_[i];
}

void Series::set_coeff(int i, Rational v) {
    if (i < 0 || i > order()) throw std::invalid_argument("Series::set_coeff: out of range");
    c_[i] = std::move(v);
}

void Series::check_same_order(const Series& o) const {
    if (order() != o.order()) throw std::invalid_argument("Series: mixed truncation orders");
}

Series Series::operator+(const Series& o) const {
    check_same_order(o);
    Series out(order());
    for (int i = 0; i <= order(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

Series Series::operator-(const Series& o) const {
    check_same_order(o);
    Series out(order());
    for (int i = 0; i <= order(); ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

Series Series::operator-() const {
    Series out(order());
    for (int i = 0; i <= order(); ++i) out.c_[i] = -c_[i];
    return out;
}

Series Series::operator*(const Series& o) const {
    check_same_order(o);
    Series out(order());
    for (int i = 0; i <= order(); ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (o.c_[j] == 0) continue;
            out.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return out;
}

Series Series::operator*(const Rational& s) const {
    Series out(order());
    for (int i = 0; i <= order(); ++i) out.c_[i] = c_[i] * s;
    return out;
}

Series Series::inverse() const {
    if (c_[0] == 0) throw std::domain_error("Series::inverse: constant term is zero");
    // b_0 = 1/a_0; b_n = -(sum_{k=1..n} a_k b_{n-k}) / a_0.
    Series out(order());
    out.c_[0] = 1 / c_[0];
    for (int n = 1; n <= order(); ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += c_[k] * out.c_[n - k];
        out.c_[n] = -acc / c_[0];
    }
    return out;
}

Series Series::pow(const Integer& e) const {
    if (e < 0) throw std::invalid_argument("Series::pow: negative exponent");
    Series result = Series::one(order());
    Series base = *this;
    Integer k = e;
    while (k != 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = result * base;
        k >>= 1;
        if (k != 0) base = base * base;
    }
    return result;
}

Series Series::scale_arg(const Rational& s) const {
    Series out(order());
    Rational p(1);
    for (int i = 0; i <= order(); ++i) {
        out.c_[i] = c_[i] * p;
        p *= s;
    }
    return out;
}

Series Series::inflate(int d) const {
    if (d < 1) throw std::invalid_argument("Series::inflate: d must be positive");
    Series out(order());
    for (int i = 0; i <= order() && i * d <= order(); ++i) out.c_[i * d] = c_[i];
    return out;
}

Series euler_product_series(const QContext& ctx, int order) {
    Series s(order);
    s.set_coeff(0, Rational(1));
    Rational denom(1);  // (q^i - 1)(q^{i-1} - 1)...(q - 1)
    for (int i = 1; i <= order; ++i) {
        denom *= ctx.q_pow(i) - 1;
        s.set_coeff(i, Rational(i % 2 == 0 ? 1 : -1) / denom);
    }
    return s;
}

}  // namespace affine
