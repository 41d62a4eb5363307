#include "affine/qcontext.hpp"

#include <stdexcept>

namespace affine {

QContext::QContext(Rational q, int cache) : q_(std::move(q)) {
    if (q_ <= 1) throw std::invalid_argument("QContext: q must exceed 1");
    if (cache < 1) cache = 1;
    pow_.reserve(cache + 1);
    pow_.emplace_back(1);
    for (int i = 1; i <= cache; ++i) pow_.push_back(pow_.back() * q_);
    poch_one_.reserve(cache + 1);
    poch_one_.emplace_back(1);
    for (int i = 1; i <= cache; ++i) {
        poch_one_.push_back(poch_one_.back() * (1 - 1 / pow_[i]));
    }
}

Rational QContext::q_pow(long e) const {
    if (e < 0) return 1 / q_pow(-e);
    if (e < static_cast<long>(pow_.size())) return pow_[e];
    Rational extra = rat_pow(q_, e - static_cast<long>(pow_.size()) + 1);
    return pow_.back() * extra;
}

Rational QContext::pochhammer(const Rational& x, int i, int stride) const {
    if (i < 0) throw std::invalid_argument("pochhammer: negative length");
    if (stride < 1) throw std::invalid_argument("pochhammer: stride must be positive");
    if (stride == 1 && x == 1 && i < static_cast<int>(poch_one_.size())) return poch_one_[i];
    Rational out(1);
    for (int j = 1; j <= i; ++j) out *= 1 - x / q_pow(static_cast<long>(j) * stride);
    return out;
}

const Rational& QContext::poch_one(int i) const {
    if (i < 0 || i >= static_cast<int>(poch_one_.size())) {
        throw std::invalid_argument("QContext::poch_one: outside cache");
    }
    return poch_one_[i];
}

bool QContext::q_is_integer() const { return q_.get_den() == 1; }

long QContext::q_as_long() const {
    if (!q_is_integer() || !q_.get_num().fits_slong_p()) {
        throw std::domain_error("QContext: q is not a machine integer");
    }
    return q_.get_num().get_si();
}

Rational tail_product(const QContext& ctx, const Rational& x, int r0, const Rational& eps) {
    if (x < 0 || x > 1) throw std::invalid_argument("tail_product: x must lie in [0,1]");
    if (eps <= 0) throw std::invalid_argument("tail_product: eps must be positive");
    // The omitted factors satisfy 1 >= prod_{r>R}(1-x/q^r) >= 1 - x/(q^R (q-1)),
    // so stop once x / (q^R (q-1)) < eps.
    Rational out(1);
    int r = r0;
    while (x / (ctx.q_pow(r - 1) * (ctx.q() - 1)) >= eps) {
        out *= 1 - x / ctx.q_pow(r);
        ++r;
    }
    return out;
}

Rational tail_product(const QContext& ctx, int r0, const Rational& eps) {
    return tail_product(ctx, Rational(1), r0, eps);
}

}  // namespace affine
