#pragma once

#include <compare>
#include <map>

#include "affine/partition.hpp"
#include "affine/qcontext.hpp"
#include "affine/series.hpp"

namespace affine {

/// Identifies the slot of one monic irreducible polynomial in a conjugacy
/// class datum, carrying exactly what the counting formulas depend on.
/// Degree-1 slots are the polynomials z - a with a a nonzero scalar (z itself
/// never carries a partition) and are identified by `unit` = a. Slots of
/// degree >= 2 have unit = 0 and are told apart by `index`.
struct PolyDescriptor {
    int degree = 1;
    long unit = 0;
    long index = 0;
    auto operator<=>(const PolyDescriptor&) const = default;
};

inline PolyDescriptor linear_slot(long a) { return PolyDescriptor{1, a, 0}; }
inline PolyDescriptor generic_slot(int degree, long index = 0) {
    return PolyDescriptor{degree, 0, index};
}

/// Conjugacy class datum: finitely many slots with nonempty partitions.
/// An element of GL(m,q) corresponds to one datum with
/// sum |lambda_phi| * deg(phi) = m.
struct RationalFormData {
    std::map<PolyDescriptor, Partition> slots;

    int dimension() const;
    const Partition* find(const PolyDescriptor& d) const;
    void set(const PolyDescriptor& d, Partition p);
};

/// Centralizer order of a class with a single degree-d slot carrying lambda:
///   form 1: q^{2d(sum_{h<i} h m_h m_i + (1/2) sum_i (i-1) m_i^2)} * prod_i |GL(m_i, q^d)|
///   form 2: q^{d sum_i (lambda'_i)^2} * prod_i (1/q^d)_{m_i}
///   form 3: q^{d n(lambda)} / P_lambda(1/q^d, 1/q^{2d}, ...; 1/q^d)
/// Forms 1 and 2 are exact and agree; form 3 truncates the principal
/// specialization at hl_vars variables and agrees up to the geometric tail.
Rational class_size_factor(const QContext& ctx, int d, const Partition& lambda, int form,
                           int hl_vars = 60);

/// Hall-Littlewood polynomial P_lambda(t, t^2, ..., t^m; t) by the one-row
/// branching rule over horizontal strips. Requires m >= lambda'_1 (otherwise
/// the specialization vanishes identically and std::domain_error is thrown).
Rational hall_littlewood_principal(const Partition& lambda, const Rational& t, int m);

/// Measure context: u in (0,1], q > 1. The infinite prefactor
/// prod_{r>=1}(1-u/q^r) is frozen at construction as a single rational
/// truncation with tail below 1e-30, so ratios and telescoping identities
/// hold exactly downstream.
class MeasureParams {
  public:
    MeasureParams(Rational u, QContext ctx);

    const Rational& u() const { return u_; }
    const QContext& ctx() const { return ctx_; }
    const Rational& prefactor() const { return prefactor_; }

  private:
    Rational u_;
    QContext ctx_;
    Rational prefactor_;
};

/// M_{u,q}(lambda) = prefactor * u^|lambda| / (q^{sum (lambda'_i)^2} prod_i (1/q)_{m_i}).
Rational measure_M(const MeasureParams& p, const Partition& lambda);

/// N_{u,q}(lambda) = prefactor * u^{|lambda|-1} (q^{lambda'_1} - 1)
///                   / (q^{sum (lambda'_i)^2} prod_i (1/q)_{m_i}),
/// for nonempty lambda (N of the empty partition is undefined and throws).
Rational measure_N(const MeasureParams& p, const Partition& lambda);

/// u-series forms with the prefactor kept symbolic as the Euler-product
/// series: measure_M_series is the lambda-marginal of a degree-d slot,
/// measure_N_series the z-1 slot marginal. Coefficient n is the exact
/// probability of the marginal in the dimension-n group.
Series measure_M_series(const QContext& ctx, int d, const Partition& lambda, int order);
Series measure_N_series(const QContext& ctx, const Partition& lambda, int order);

/// Number of elements of the affine group of dimension n (order q^n |GL(n,q)|)
/// whose rational canonical form is `data` (dimension n+1, z-1 slot required
/// nonempty for a nonzero result):
///   |A(n,q)| (q^{lambda'_{z-1,1}} - 1) / prod_phi q^{deg phi sum (lambda'_i)^2} (1/q^d)_{m_i}.
/// Exact integer.
Integer affine_count(int n, const QContext& ctx, const RationalFormData& data);

/// Same for the maximal parabolic (order (q-1) q^n |GL(n,q)|); the z-a slot
/// contributes for every nonzero scalar a:
///   sum_a |P(n,q)| (q^{lambda'_{z-a,1}} - 1) / ((q-1) prod_phi ...).
Integer parabolic_count(int n, const QContext& ctx, const RationalFormData& data);

/// Distribution of the first column height under N_{u,q}:
///   Q(a) = prefactor * u^{a-1} / (q^{a^2-a} (u/q)_a (1/q)_{a-1}),  a >= 1.
Rational markov_initial(const MeasureParams& p, int a);

/// Transition to the next column height, 0 <= b <= a (absorbing at 0):
///   K(a,b) = u^b (1/q)_a (u/q)_a / (q^{b^2} (1/q)_{a-b} (1/q)_b (u/q)_b).
/// Rows sum to one exactly.
Rational markov_kernel(const MeasureParams& p, int a, int b);

}  // namespace affine
