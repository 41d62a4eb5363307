#include "affine/cycle_index.hpp"

#include <map>
#include <stdexcept>

namespace affine {

namespace {

// Moebius function for the modest degrees a truncation order can reach.
int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

Integer int_q_pow(const Integer& q, long e) {
    if (e < 0) throw std::invalid_argument("negative power of q in integer context");
    return int_pow(q, static_cast<unsigned long>(e));
}

// Exponent of the degree-d factor in the separable/cyclic/semisimple
// products: the count of eligible monic irreducibles of degree d. GL
// excludes only z; Affine and Parabolic exclude z and the distinguished
// linear polynomial.
Integer series_exponent(GroupKind kind, int d, const Integer& q) {
    Integer n = count_irreducibles(d, q);
    if (d == 1) return kind == GroupKind::GL ? Integer(n - 1) : Integer(n - 2);
    return n;
}

long require_integer_q(const QContext& ctx) {
    if (!ctx.q_is_integer() || ctx.q_as_long() < 2)
        throw std::invalid_argument("group-facing q must be an integer >= 2");
    return ctx.q_as_long();
}

}  // namespace

Integer group_order(GroupKind kind, int n, const Integer& q) {
    if (n < 0) throw std::invalid_argument("dimension must be nonnegative");
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    Integer gl = 1;
    Integer qn = int_q_pow(q, n);
    for (int i = 0; i < n; ++i) gl *= qn - int_q_pow(q, i);
    switch (kind) {
        case GroupKind::GL:
            return gl;
        case GroupKind::Affine:
            return qn * gl;
        case GroupKind::Parabolic:
            return (q - 1) * qn * gl;
    }
    throw std::logic_error("unknown group kind");
}

Integer count_irreducibles(int d, const Integer& q) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    Integer total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        total += moebius(e) * int_q_pow(q, d / e);
    }
    Integer n = total / d;
    if (n * d != total) throw std::logic_error("irreducible count not integral");
    return n;
}

IrreducibleCensus::IrreducibleCensus(const Integer& q_, int max_degree) : q(q_) {
    if (max_degree < 1) throw std::invalid_argument("census needs at least degree 1");
    N.reserve(max_degree);
    Nprime.reserve(max_degree);
    for (int d = 1; d <= max_degree; ++d) {
        N.push_back(count_irreducibles(d, q));
        Nprime.push_back(d == 1 ? Integer(N.back() - 2) : N.back());
    }
}

Series separable_series(GroupKind kind, const QContext& ctx, int order) {
    Integer q(require_integer_q(ctx));
    Series result = Series::one(order);
    for (int d = 1; d <= order; ++d) {
        Integer e = series_exponent(kind, d, q);
        if (e == 0) continue;
        // 1 + u^d/(q^d - 1)
        Series base = Series::one(order) + Series::monomial(order, d, 1 / (ctx.q_pow(d) - 1));
        result = result * base.pow(e);
    }
    return result;
}

Series cyclic_series(GroupKind kind, const QContext& ctx, int order) {
    Integer q(require_integer_q(ctx));
    Series result = Series::one(order);
    if (kind != GroupKind::GL) {
        // The distinguished linear slot contributes 1/(1 - u/q).
        result = Series::geometric(order).scale_arg(1 / ctx.q());
    }
    for (int d = 1; d <= order; ++d) {
        Integer e = series_exponent(kind, d, q);
        if (e == 0) continue;
        // 1 + u^d / ((q^d-1)(1 - u^d/q^d))
        Series base = Series::one(order);
        Rational lead = 1 / (ctx.q_pow(d) - 1);
        for (int k = 1; k * d <= order; ++k)
            base.set_coeff(k * d, lead * ctx.q_pow(-static_cast<long>(d) * (k - 1)));
        result = result * base.pow(e);
    }
    return result;
}

Series semisimple_series(GroupKind kind, const QContext& ctx, int order) {
    Integer q(require_integer_q(ctx));
    Series result = Series::one(order);
    if (kind != GroupKind::GL) {
        // One-column z-1 marginal: sum_k u^k / (q^{k^2+k} (1/q)_k).
        Series special(order);
        for (int k = 0; k <= order; ++k)
            special.set_coeff(
                k, ctx.q_pow(-static_cast<long>(k) * k - k) / ctx.pochhammer(1, k));
        result = special;
    }
    for (int d = 1; d <= order; ++d) {
        Integer e = series_exponent(kind, d, q);
        if (e == 0) continue;
        // sum_k u^{kd} / (q^{d k^2} (1/q^d)_k)
        Series base(order);
        for (int k = 0; k * d <= order; ++k)
            base.set_coeff(k * d, ctx.q_pow(-static_cast<long>(d) * k * k) /
                                      ctx.pochhammer(1, k, d));
        result = result * base.pow(e);
    }
    return result;
}

Series allpoly_series(const QContext& ctx, int order) {
    Integer q(require_integer_q(ctx));
    Series result = Series::one(order);
    for (int d = 1; d <= order; ++d) {
        Series base = Series::one(order) - Series::monomial(order, d, ctx.q_pow(-d));
        result = result * base.pow(count_irreducibles(d, q));
    }
    return result;
}

Rational limit_separable(GroupKind kind, const QContext& ctx) {
    Rational q = ctx.q();
    Rational gl = 1 - 1 / q;
    if (kind == GroupKind::GL) return gl;
    return gl / (1 + 1 / (q - 1));
}

Rational limit_cyclic(GroupKind kind, const QContext& ctx) {
    Rational q = ctx.q();
    Rational gl = (1 - ctx.q_pow(-5)) / (1 + ctx.q_pow(-3));
    if (kind == GroupKind::GL) return gl;
    return (1 - 1 / q) / (1 - 1 / q + ctx.q_pow(-2)) * gl;
}

namespace {

// Partial product of (1 - t^{e(r)}) over the residues r in `mods`,
// r = 1..R, paired with the one-sided tail bound sum_{r>R} t^{e(r)}
// <= t^{min e over the tail} / (1 - t).
struct ResidueProduct {
    Rational value{1};
    Rational tail;  // subtractive relative bound: true in [value*(1-tail), value]
};

ResidueProduct residue_product(const QContext& ctx, std::initializer_list<int> residues,
                               int shift, int R) {
    // Product over r = 1..R with r mod 5 in residues of (1 - t^{r+shift}).
    ResidueProduct out;
    for (int r = 1; r <= R; ++r) {
        bool take = false;
        for (int m : residues)
            if (r % 5 == m) take = true;
        if (take) out.value *= 1 - ctx.q_pow(-static_cast<long>(r) - shift);
    }
    out.tail = ctx.q_pow(-static_cast<long>(R) - shift - 1) / (1 - 1 / ctx.q());
    if (out.tail > 1) out.tail = 1;
    return out;
}

}  // namespace

Rational limit_semisimple(GroupKind kind, const QContext& ctx, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    require_integer_q(ctx);
    for (int R = 8;; R *= 2) {
        if (R > 1 << 20) throw std::runtime_error("semisimple limit failed to converge");
        // GL limit: prod over r = 0, +-2 mod 5 of (1-t^{r-1})/(1-t^r).
        ResidueProduct num = residue_product(ctx, {0, 2, 3}, -1, R);
        ResidueProduct den = residue_product(ctx, {0, 2, 3}, 0, R);
        Rational lo = num.value * (1 - num.tail) / den.value;
        Rational hi = num.value / (den.value * (1 - den.tail));
        if (kind != GroupKind::GL) {
            // Corollary form: prod_{0,+-1} (1-t^r) * prod_{0,+-2} (1-t^{r-1})
            //                 / prod_{0,+-2} (1-t^r)^2.
            ResidueProduct a = residue_product(ctx, {0, 1, 4}, 0, R);
            ResidueProduct b = residue_product(ctx, {0, 2, 3}, -1, R);
            ResidueProduct c = residue_product(ctx, {0, 2, 3}, 0, R);
            lo = a.value * (1 - a.tail) * b.value * (1 - b.tail) / (c.value * c.value);
            hi = a.value * b.value / (c.value * c.value * (1 - c.tail) * (1 - c.tail));
        }
        if (hi - lo < eps) return (hi + lo) / 2;
    }
}

Rational limit_semisimple_theta(const QContext& ctx, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    require_integer_q(ctx);
    Rational t = 1 / ctx.q();
    // Rigorous positive lower bound on (1/q)_k for every k.
    Rational poch_floor = (1 - t) * (1 - t * t) * (1 - t * t * t / (1 - t));
    if (poch_floor <= 0) throw std::logic_error("pochhammer floor not positive");
    Rational s_top = 0, s_bot = 0;
    Rational tail;
    for (int k = 0;; ++k) {
        s_top += ctx.q_pow(-static_cast<long>(k) * k - k) / ctx.pochhammer(1, k);
        s_bot += ctx.q_pow(-static_cast<long>(k) * k) / ctx.pochhammer(1, k);
        // Terms beyond k are at most t^{(k+1)^2} / poch_floor each; geometric sum.
        tail = ctx.q_pow(-(static_cast<long>(k) + 1) * (k + 1)) / (poch_floor * (1 - t));
        if (tail < eps / 16 && k >= 2) break;
        if (k > 4096) throw std::runtime_error("theta sums failed to converge");
    }
    Rational ratio_lo = s_top / (s_bot + tail);
    Rational ratio_hi = (s_top + tail) / s_bot;
    Rational gl = limit_semisimple(GroupKind::GL, ctx, eps / 16);
    Rational lo = ratio_lo * (gl - eps / 16);
    Rational hi = ratio_hi * (gl + eps / 16);
    if (hi - lo >= eps) throw std::logic_error("theta route interval too wide");
    return (hi + lo) / 2;
}

Rational bound_separable(int n, const QContext& ctx, const Rational& k) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    Rational q = ctx.q();
    Rational c(3, 2);
    Rational Kplus = k * c / (c - 1) * (1 + (q - 2) / (c * c)) * (c / (q - c));
    if (q == 2) {
        Rational r = c / q;
        return 2 * Kplus * rat_pow(r, n + 1) / (1 - r * r);
    }
    Rational r = c / (q - 1);
    return 2 * Kplus * c * rat_pow(r, n) / ((c - 1) * (1 - r)) +
           1 / ((1 - 1 / (q - 1)) * rat_pow(q - 1, n + 1));
}

Rational bound_cyclic(int n, const QContext& ctx) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    return 1 / (ctx.q_pow(n + 1) * (1 - 1 / ctx.q()));
}

namespace {

// |A(m,q)| as a rational in the context's q: q^{m^2+m} (1/q)_m.
Rational affine_order_rational(const QContext& ctx, int m) {
    return ctx.q_pow(static_cast<long>(m) * m + m) * ctx.pochhammer(1, m);
}

}  // namespace

Rational fixed_space_prob(int n, int k, const QContext& ctx) {
    if (k < 1 || k > n + 1) throw std::invalid_argument("fixed-space dimension out of range");
    Rational sum = 0;
    Rational denom = 1;  // (q^i - 1) ... (q - 1)
    for (int i = 0; i <= n - k + 1; ++i) {
        if (i > 0) denom *= ctx.q_pow(i) - 1;
        Rational term = 1 / (ctx.q_pow(static_cast<long>(k) * i) * denom);
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum / affine_order_rational(ctx, k - 1);
}

Rational fixed_space_limit(int k, const QContext& ctx, const Rational& eps) {
    if (k < 1) throw std::invalid_argument("fixed-space dimension out of range");
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    Rational c = ctx.q_pow(-(static_cast<long>(k) * k - k)) /
                 (ctx.pochhammer(1, k - 1) * ctx.pochhammer(1, k - 1) *
                  (1 - ctx.q_pow(-k)));
    Rational inner_eps = eps / (c + 1);
    return tail_product(ctx, 1, inner_eps) * c;
}

Rational restricted_mass(int k, const MeasureParams& p) {
    if (k < 1) throw std::invalid_argument("column count must be positive");
    const QContext& ctx = p.ctx();
    return rat_pow(p.u(), k - 1) * p.prefactor() /
           (affine_order_rational(ctx, k - 1) * ctx.pochhammer(p.u(), k));
}

Integer unipotent_rank_count(int n, int k, const QContext& ctx) {
    if (k < 1 || k > n + 1) throw std::invalid_argument("part count out of range");
    require_integer_q(ctx);
    Rational value = affine_order_rational(ctx, n) / affine_order_rational(ctx, k - 1);
    // (1-1/q^k)...(1-1/q^n) = (1/q)_n / (1/q)_{k-1}
    value *= ctx.pochhammer(1, n) / ctx.pochhammer(1, k - 1);
    value /= ctx.q_pow(n - k + 1) * ctx.pochhammer(1, n - k + 1);
    Integer result(value.get_num());
    if (value.get_den() != 1) throw std::logic_error("unipotent count not integral");
    return result;
}

namespace {

// sum over accepted lambda of u^{d|lambda|} / (q^{d sum(lam'_i)^2} (1/q^d)_{m_i}).
Series marked_ordinary_sum(const QContext& ctx, int d, int order,
                           const std::function<bool(const Partition&)>& accept) {
    Series out(order);
    for (int n = 0; n * d <= order; ++n) {
        Rational total = 0;
        for_each_partition(n, [&](const Partition& lambda) {
            if (accept(lambda)) total += 1 / class_size_factor(ctx, d, lambda, 2);
        });
        if (total != 0) out.set_coeff(n * d, total);
    }
    return out;
}

// sum over accepted nonempty lambda of u^{|lambda|-1}(q^{lam'_1}-1)/form2.
Series marked_special_sum(const QContext& ctx, int order,
                          const std::function<bool(const Partition&)>& accept) {
    Series out(order);
    for (int n = 1; n <= order + 1; ++n) {
        Rational total = 0;
        for_each_partition(n, [&](const Partition& lambda) {
            if (accept(lambda))
                total += (ctx.q_pow(lambda.col_height(1)) - 1) /
                         class_size_factor(ctx, 1, lambda, 2);
        });
        if (total != 0) out.set_coeff(n - 1, total);
    }
    return out;
}

// Full (unmarked) slot sums: ordinary sums telescope to the inverse Euler
// product at q^d, the special z-1 sum to the inverse at q.
Series full_ordinary_sum(const QContext& ctx, int d, int order) {
    QContext ctxd(ctx.q_pow(d), order + 2);
    Series base = euler_product_series(ctxd, order / d);
    Series placed(order);
    for (int i = 0; i * d <= order; ++i) placed.set_coeff(i * d, base.coeff(i));
    return placed.inverse();
}

Series full_special_sum(const QContext& ctx, int order) {
    return euler_product_series(ctx, order).inverse();
}

}  // namespace

Series joint_coefficient(GroupKind kind, const QContext& ctx, int order,
                         const std::vector<SlotMarker>& markers) {
    long q = require_integer_q(ctx);
    Integer qz(q);

    std::map<PolyDescriptor, const SlotMarker*> by_slot;
    for (const auto& m : markers) {
        if (m.slot.degree < 1) throw std::invalid_argument("marker degree must be positive");
        if (m.slot.degree == 1 && (m.slot.unit < 1 || m.slot.unit >= q))
            throw std::invalid_argument("linear marker unit out of range");
        if (m.slot.degree >= 2 && m.slot.unit != 0)
            throw std::invalid_argument("higher-degree marker must have unit 0");
        if (!m.accept) throw std::invalid_argument("marker predicate is empty");
        if (!by_slot.emplace(m.slot, &m).second)
            throw std::invalid_argument("duplicate marker slot");
    }

    std::map<int, int> marked_per_degree;
    for (const auto& [slot, m] : by_slot) marked_per_degree[slot.degree]++;
    auto marked_count = [&](int d) -> int {
        auto it = marked_per_degree.find(d);
        return it == marked_per_degree.end() ? 0 : it->second;
    };

    // Shared factor: every marker of degree >= 2 contributes its restricted
    // sum in every branch below, and so do GL's linear markers.
    auto ordinary_factor = [&](const SlotMarker& m) {
        return marked_ordinary_sum(ctx, m.slot.degree, order, m.accept);
    };

    auto full_power = [&](int d, const Integer& e) {
        if (e < 0) throw std::invalid_argument("more markers than slots of a degree");
        if (e == 0) return Series::one(order);
        return full_ordinary_sum(ctx, d, order).pow(e);
    };

    if (kind == GroupKind::GL) {
        Series result = Series::one(order);
        for (const auto& [slot, m] : by_slot) result = result * ordinary_factor(*m);
        for (int d = 1; d <= order; ++d) {
            Integer avail = d == 1 ? Integer(qz - 1) : count_irreducibles(d, qz);
            result = result * full_power(d, avail - marked_count(d));
        }
        return result;
    }

    if (kind == GroupKind::Affine) {
        PolyDescriptor z1 = linear_slot(1);
        auto zit = by_slot.find(z1);
        Series result = zit != by_slot.end()
                            ? marked_special_sum(ctx, order, zit->second->accept)
                            : full_special_sum(ctx, order);
        int marked_linear_other = 0;
        for (const auto& [slot, m] : by_slot) {
            if (slot == z1) continue;
            result = result * ordinary_factor(*m);
            if (slot.degree == 1) ++marked_linear_other;
        }
        for (int d = 1; d <= order; ++d) {
            Integer avail = d == 1 ? Integer(qz - 2) : count_irreducibles(d, qz);
            Integer used(d == 1 ? marked_linear_other : marked_count(d));
            result = result * full_power(d, avail - used);
        }
        return result;
    }

    // Parabolic: average the affine-style term over the distinguished unit a.
    Series acc(order);
    for (long a = 1; a < q; ++a) {
        PolyDescriptor za = linear_slot(a);
        auto zit = by_slot.find(za);
        Series term = zit != by_slot.end()
                          ? marked_special_sum(ctx, order, zit->second->accept)
                          : full_special_sum(ctx, order);
        int marked_linear_other = 0;
        for (const auto& [slot, m] : by_slot) {
            if (slot == za) continue;
            term = term * ordinary_factor(*m);
            if (slot.degree == 1) ++marked_linear_other;
        }
        for (int d = 1; d <= order; ++d) {
            Integer avail = d == 1 ? Integer(qz - 2) : count_irreducibles(d, qz);
            Integer used(d == 1 ? marked_linear_other : marked_count(d));
            term = term * full_power(d, avail - used);
        }
        acc = acc + term;
    }
    return acc * (Rational(1) / (ctx.q() - 1));
}

}  // namespace affine
