#pragma once

#include <functional>
#include <vector>

#include "affine/measures.hpp"
#include "affine/partition.hpp"
#include "affine/qcontext.hpp"
#include "affine/series.hpp"

namespace affine {

/// The three matrix groups under study. A(n,q) is the subgroup of
/// GL(n+1,q) fixing the first coordinate functional (x_11 = 1, first
/// column otherwise zero); P(n,q) relaxes x_11 to any nonzero scalar.
enum class GroupKind { GL, Affine, Parabolic };

/// |GL(n,q)|, |A(n,q)| = q^n |GL(n,q)|, or |P(n,q)| = (q-1) q^n |GL(n,q)|.
Integer group_order(GroupKind kind, int n, const Integer& q);

/// Number N(d,q) of monic irreducible polynomials of degree d over F_q,
/// via Moebius inversion of sum_{e|d} e N(e,q) = q^d.
Integer count_irreducibles(int d, const Integer& q);

/// Table of N(d,q) together with N'(d,q), the count with z and z-1
/// removed: N'(1,q) = q-2 and N'(d,q) = N(d,q) for d > 1.
struct IrreducibleCensus {
    Integer q;
    std::vector<Integer> N;       // N[d-1] = N(d,q)
    std::vector<Integer> Nprime;  // Nprime[d-1] = N'(d,q)

    IrreducibleCensus(const Integer& q_, int max_degree);
    int max_degree() const { return static_cast<int>(N.size()); }
};

/// Generating functions whose u^n coefficient is the exact proportion of
/// separable / cyclic / semisimple elements in the group of the given
/// kind acting in dimension n. The Parabolic series coincide with the
/// Affine ones.
Series separable_series(GroupKind kind, const QContext& ctx, int order);
Series cyclic_series(GroupKind kind, const QContext& ctx, int order);
Series semisimple_series(GroupKind kind, const QContext& ctx, int order);

/// prod_d (1 - u^d/q^d)^{N(d,q)} truncated; equals 1 - u identically
/// (unique factorization in F_q[z]).
Series allpoly_series(const QContext& ctx, int order);

/// Exact limiting proportions. Separable: (q-1)^2/q^2 for Affine and
/// Parabolic, 1 - 1/q for GL. Cyclic: (1-1/q)/(1-1/q+1/q^2) times the GL
/// limit (1-1/q^5)/(1+1/q^3).
Rational limit_separable(GroupKind kind, const QContext& ctx);
Rational limit_cyclic(GroupKind kind, const QContext& ctx);

/// Limiting semisimple proportion through the Rogers-Ramanujan product
/// forms, within eps of the true value.
Rational limit_semisimple(GroupKind kind, const QContext& ctx, const Rational& eps);

/// Same Affine/Parabolic limit through the ratio of theta-like sums
/// (sum_k t^{k^2+k}/(1/q)_k) / (sum_k t^{k^2}/(1/q)_k) times the GL
/// limit; an independent route used for cross-validation.
Rational limit_semisimple_theta(const QContext& ctx, const Rational& eps);

/// Convergence-rate bound |s_A(n,q) - s_A(inf,q)| <= bound_separable(n).
/// The constant K+ = k c/(c-1) (1+(q-2)/c^2)(c/(q-c)) with c = 3/2
/// inherits an unspecified constant k from the cited bound on GL; it is
/// exposed with default 1.
Rational bound_separable(int n, const QContext& ctx, const Rational& k = 1);

/// |c_A(n,q) - c_A(inf,q)| <= 1/(q^{n+1}(1-1/q)).
Rational bound_cyclic(int n, const QContext& ctx);

/// Chance that an element of A(n,q) has a k-dimensional fixed space,
/// 1 <= k <= n+1.
Rational fixed_space_prob(int n, int k, const QContext& ctx);

/// n -> infinity limit of the above, within eps.
Rational fixed_space_limit(int k, const QContext& ctx, const Rational& eps);

/// sum over partitions with exactly k parts of N_{u,q}:
/// u^{k-1}/|A(k-1,q)| * prod_{r>k}(1-u/q^r).
Rational restricted_mass(int k, const MeasureParams& p);

/// Number of unipotent elements of A(n,q) whose partition has k parts
/// (equivalently with fixed-space dimension k), 1 <= k <= n+1.
Integer unipotent_rank_count(int n, int k, const QContext& ctx);

/// A marked slot of the cycle index: the named polynomial's partition is
/// restricted to those accepted by the predicate, all other slots free.
struct SlotMarker {
    PolyDescriptor slot;
    std::function<bool(const Partition&)> accept;
};

/// Exact truncated cycle index with finitely many marked slots: the u^n
/// coefficient is the probability that a uniform element of the
/// dimension-n group satisfies every marker. Without markers this is
/// sum_n u^n.
Series joint_coefficient(GroupKind kind, const QContext& ctx, int order,
                         const std::vector<SlotMarker>& markers);

}  // namespace affine
