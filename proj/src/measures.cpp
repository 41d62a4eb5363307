#include "affine/measures.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace affine {

namespace {

/// sum_i (lambda'_i)^2 over the columns of lambda.
long sum_conjugate_squares(const Partition& lambda) {
    long acc = 0;
    for (int s = 1; s <= lambda.first_part(); ++s) {
        long h = lambda.col_height(s);
        acc += h * h;
    }
    return acc;
}

/// Denominator common to all the class formulas (form 2 without the name):
/// q^{d sum (lambda'_i)^2} prod_i (1/q^d)_{m_i(lambda)}.
Rational form2(const QContext& ctx, int d, const Partition& lambda) {
    Rational out = ctx.q_pow(d * sum_conjugate_squares(lambda));
    for (int i = 1; i <= lambda.first_part(); ++i) {
        int m = lambda.multiplicity(i);
        if (m > 0) out *= ctx.pochhammer(Rational(1), m, d);
    }
    return out;
}

Rational form1(const QContext& ctx, int d, const Partition& lambda) {
    // exponent 2d [ sum_{h<i} h m_h m_i + (1/2) sum_i (i-1) m_i^2 ]; the
    // bracket doubles to an integer.
    long cross = 0, diag = 0;
    int top = lambda.first_part();
    for (int h = 1; h <= top; ++h) {
        long mh = lambda.multiplicity(h);
        if (mh == 0) continue;
        diag += (h - 1) * mh * mh;
        for (int i = h + 1; i <= top; ++i) cross += h * mh * lambda.multiplicity(i);
    }
    Rational out = ctx.q_pow(static_cast<long>(d) * (2 * cross + diag));
    for (int i = 1; i <= top; ++i) {
        int m = lambda.multiplicity(i);
        if (m == 0) continue;
        // |GL(m, q^d)| = q^{d m^2} (1/q^d)_m, assembled from the context.
        out *= ctx.q_pow(static_cast<long>(d) * m * m) * ctx.pochhammer(Rational(1), m, d);
    }
    return out;
}

Rational form3(const QContext& ctx, int d, const Partition& lambda, int hl_vars) {
    Rational t = 1 / ctx.q_pow(d);
    int m = std::max(hl_vars, lambda.col_height(1));
    return ctx.q_pow(static_cast<long>(d) * n_stat(lambda)) /
           hall_littlewood_principal(lambda, t, m);
}

}  // namespace

int RationalFormData::dimension() const {
    int dim = 0;
    for (const auto& [slot, lambda] : slots) dim += slot.degree * lambda.size();
    return dim;
}

const Partition* RationalFormData::find(const PolyDescriptor& d) const {
    auto it = slots.find(d);
    return it == slots.end() ? nullptr : &it->second;
}

void RationalFormData::set(const PolyDescriptor& d, Partition p) {
    if (d.degree < 1) throw std::invalid_argument("RationalFormData: bad degree");
    if ((d.degree == 1) != (d.unit != 0)) {
        throw std::invalid_argument(
            "RationalFormData: degree-1 slots are z-a with unit a != 0, higher "
            "degrees have unit 0");
    }
    if (p.empty()) {
        slots.erase(d);
    } else {
        slots[d] = std::move(p);
    }
}

Rational class_size_factor(const QContext& ctx, int d, const Partition& lambda, int form,
                           int hl_vars) {
    if (d < 1) throw std::invalid_argument("class_size_factor: degree must be positive");
    switch (form) {
        case 1: return form1(ctx, d, lambda);
        case 2: return form2(ctx, d, lambda);
        case 3: return form3(ctx, d, lambda, hl_vars);
        default: throw std::invalid_argument("class_size_factor: form must be 1, 2 or 3");
    }
}

namespace {

/// psi_{lambda/mu}(t) for a horizontal strip lambda/mu:
/// prod over i with m_i(mu) = m_i(lambda) + 1 of (1 - t^{m_i(mu)}).
Rational psi_strip(const Partition& lambda, const Partition& mu, const Rational& t) {
    Rational out(1);
    for (int i = 1; i <= lambda.first_part(); ++i) {
        int mmu = mu.multiplicity(i);
        if (mmu == lambda.multiplicity(i) + 1) out *= 1 - rat_pow(t, mmu);
    }
    return out;
}

void horizontal_strip_subs(const std::vector<int>& lam, std::size_t i, std::vector<int>& acc,
                           std::vector<Partition>& out) {
    if (i == lam.size()) {
        std::vector<int> parts;
        for (int p : acc) {
            if (p > 0) parts.push_back(p);
        }
        out.emplace_back(std::move(parts));
        return;
    }
    int lo = i + 1 < lam.size() ? lam[i + 1] : 0;
    int hi = lam[i];
    if (i > 0) hi = std::min(hi, acc[i - 1]);  // keep mu weakly decreasing
    for (int v = hi; v >= lo; --v) {
        acc.push_back(v);
        horizontal_strip_subs(lam, i + 1, acc, out);
        acc.pop_back();
    }
}

/// All mu with lambda/mu a horizontal strip (mu_i in [lambda_{i+1}, lambda_i]).
std::vector<Partition> horizontal_strip_predecessors(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> acc;
    horizontal_strip_subs(lambda.parts(), 0, acc, out);
    return out;
}

}  // namespace

Rational hall_littlewood_principal(const Partition& lambda, const Rational& t, int m) {
    if (m < lambda.col_height(1)) {
        throw std::domain_error("hall_littlewood_principal: fewer variables than rows");
    }
    // value(nu, j) = P_nu(t^j, ..., t^m; t), peeled one variable at a time:
    // P_nu(x_j..x_m) = sum_mu psi_{nu/mu}(t) x_j^{|nu|-|mu|} P_mu(x_{j+1}..x_m).
    std::map<std::pair<Partition, int>, Rational> memo;
    std::function<Rational(const Partition&, int)> value = [&](const Partition& nu,
                                                               int j) -> Rational {
        if (nu.empty()) return Rational(1);
        if (j > m) return Rational(0);
        auto key = std::make_pair(nu, j);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Rational xj = rat_pow(t, j);
        Rational acc(0);
        for (const Partition& mu : horizontal_strip_predecessors(nu)) {
            acc += psi_strip(nu, mu, t) * rat_pow(xj, nu.size() - mu.size()) * value(mu, j + 1);
        }
        memo.emplace(std::move(key), acc);
        return acc;
    };
    return value(lambda, 1);
}

MeasureParams::MeasureParams(Rational u, QContext ctx) : u_(std::move(u)), ctx_(std::move(ctx)) {
    if (u_ <= 0 || u_ > 1) throw std::invalid_argument("MeasureParams: u must lie in (0,1]");
    Rational eps = make_rational(1, int_pow(Integer(10), 30));
    prefactor_ = tail_product(ctx_, u_, 1, eps);
}

Rational measure_M(const MeasureParams& p, const Partition& lambda) {
    return p.prefactor() * rat_pow(p.u(), lambda.size()) / form2(p.ctx(), 1, lambda);
}

Rational measure_N(const MeasureParams& p, const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("measure_N: partition must be nonempty");
    Rational num = rat_pow(p.u(), lambda.size() - 1) *
                   (p.ctx().q_pow(lambda.col_height(1)) - 1);
    return p.prefactor() * num / form2(p.ctx(), 1, lambda);
}

Series measure_M_series(const QContext& ctx, int d, const Partition& lambda, int order) {
    if (d < 1) throw std::invalid_argument("measure_M_series: degree must be positive");
    // prod_{r>=1}(1 - u^d/q^{rd}) is the Euler product of the base-q^d
    // context with u -> u^d.
    QContext ctxd(ctx.q_pow(d), order + 2);
    Series base = euler_product_series(ctxd, order / d);
    Series pref(order);
    for (int i = 0; i * d <= order; ++i) pref.set_coeff(i * d, base.coeff(i));
    Series mono = Series::monomial(order, d * lambda.size(), 1 / form2(ctx, d, lambda));
    return pref * mono;
}

Series measure_N_series(const QContext& ctx, const Partition& lambda, int order) {
    if (lambda.empty()) throw std::invalid_argument("measure_N_series: nonempty lambda required");
    Series pref = euler_product_series(ctx, order);
    Rational scale = (ctx.q_pow(lambda.col_height(1)) - 1) / form2(ctx, 1, lambda);
    return pref * Series::monomial(order, lambda.size() - 1, scale);
}

namespace {

Rational count_denominator(const QContext& ctx, const RationalFormData& data) {
    Rational out(1);
    for (const auto& [slot, lambda] : data.slots) out *= form2(ctx, slot.degree, lambda);
    return out;
}

Integer to_integer(const Rational& r, const char* who) {
    if (r.get_den() != 1) throw std::logic_error(std::string(who) + ": count is not integral");
    return r.get_num();
}

Rational gl_order_rational(const QContext& ctx, int n) {
    // |GL(n,q)| = q^{n^2} (1/q)_n, valid as a rational formula for any q.
    return ctx.q_pow(static_cast<long>(n) * n) * ctx.pochhammer(Rational(1), n);
}

void check_dimension(int n, const RationalFormData& data, const char* who) {
    if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be nonnegative");
    if (data.dimension() != n + 1) {
        throw std::invalid_argument(std::string(who) + ": datum dimension " +
                                    std::to_string(data.dimension()) + " != n+1");
    }
}

}  // namespace

Integer affine_count(int n, const QContext& ctx, const RationalFormData& data) {
    check_dimension(n, data, "affine_count");
    const Partition* at_one = data.find(linear_slot(1));
    if (at_one == nullptr) return 0;  // no eigenvalue 1, no affine representative
    Rational order = ctx.q_pow(n) * gl_order_rational(ctx, n);
    Rational num = ctx.q_pow(at_one->col_height(1)) - 1;
    return to_integer(order * num / count_denominator(ctx, data), "affine_count");
}

Integer parabolic_count(int n, const QContext& ctx, const RationalFormData& data) {
    check_dimension(n, data, "parabolic_count");
    if (!ctx.q_is_integer()) {
        throw std::invalid_argument("parabolic_count: q must be an integer");
    }
    long q = ctx.q_as_long();
    Rational order = (ctx.q() - 1) * ctx.q_pow(n) * gl_order_rational(ctx, n);
    Rational num(0);
    for (long a = 1; a < q; ++a) {
        if (const Partition* lam = data.find(linear_slot(a))) {
            num += ctx.q_pow(lam->col_height(1)) - 1;
        }
    }
    if (num == 0) return 0;
    Rational denom = (ctx.q() - 1) * count_denominator(ctx, data);
    return to_integer(order * num / denom, "parabolic_count");
}

Rational markov_initial(const MeasureParams& p, int a) {
    if (a < 1) throw std::invalid_argument("markov_initial: a must be at least 1");
    const QContext& ctx = p.ctx();
    Rational denom = ctx.q_pow(static_cast<long>(a) * a - a) * ctx.pochhammer(p.u(), a) *
                     ctx.pochhammer(Rational(1), a - 1);
    return p.prefactor() * rat_pow(p.u(), a - 1) / denom;
}

Rational markov_kernel(const MeasureParams& p, int a, int b) {
    if (a < 0 || b < 0 || b > a) throw std::invalid_argument("markov_kernel: need 0 <= b <= a");
    const QContext& ctx = p.ctx();
    Rational num = rat_pow(p.u(), b) * ctx.pochhammer(Rational(1), a) * ctx.pochhammer(p.u(), a);
    Rational denom = ctx.q_pow(static_cast<long>(b) * b) * ctx.pochhammer(Rational(1), a - b) *
                     ctx.pochhammer(Rational(1), b) * ctx.pochhammer(p.u(), b);
    return num / denom;
}

}  // namespace affine
