#pragma once

#include <vector>

#include "affine/numeric.hpp"

namespace affine {

/// Evaluation context for a fixed q > 1. Powers of q and the factors
/// (1/q)_i = prod_{j<=i} (1 - 1/q^j) are precomputed up to a cache bound at
/// construction; the object is read-only afterwards, so concurrent readers
/// are safe. Queries past the cache are computed on the fly.
class QContext {
  public:
    explicit QContext(Rational q, int cache = 160);

    const Rational& q() const { return q_; }

    /// q^e for any integer e.
    Rational q_pow(long e) const;

    /// (x; q)-style factor: prod_{j=1}^{i} (1 - x / q^{j*stride}).
    /// stride d > 1 evaluates the same product in base q^d.
    Rational pochhammer(const Rational& x, int i, int stride = 1) const;

    /// Cached (1/q)_i.
    const Rational& poch_one(int i) const;

    bool q_is_integer() const;
    long q_as_long() const;

  private:
    Rational q_;
    std::vector<Rational> pow_;       // q^0 .. q^cache
    std::vector<Rational> poch_one_;  // (1/q)_0 .. (1/q)_cache
};

/// Truncated product prod_{r=r0}^{R} (1 - x/q^r) with R chosen so the
/// omitted tail perturbs the value by less than eps:
/// |prod_{r>=r0} - returned| <= x / (q^R (q-1)). Requires 0 <= x <= 1, eps > 0.
Rational tail_product(const QContext& ctx, const Rational& x, int r0, const Rational& eps);

/// tail_product at x = 1: numeric stand-in for prod_{r>=r0}(1 - 1/q^r).
Rational tail_product(const QContext& ctx, int r0, const Rational& eps);

}  // namespace affine
