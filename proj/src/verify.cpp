#include "affine/verify.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "affine/cycle_index.hpp"
#include "affine/measures.hpp"
#include "affine/oracle.hpp"
#include "affine/sampler.hpp"

namespace affine::verify {

namespace {

std::string rd(const Rational& r) {
    std::ostringstream os;
    os << to_string(r) << " (" << to_double(r) << ")";
    return os.str();
}

CheckResult check(std::string name, bool pass, std::string detail) {
    return CheckResult{std::move(name), pass, std::move(detail)};
}

std::vector<Partition> partitions_up_to(int bound) {
    std::vector<Partition> out;
    for (int n = 0; n <= bound; ++n)
        for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::string group_name(GroupKind kind) {
    switch (kind) {
        case GroupKind::GL: return "GL";
        case GroupKind::Affine: return "A";
        case GroupKind::Parabolic: return "P";
    }
    return "?";
}

Rational eps_pow10(int k) { return make_rational(1, int_pow(Integer(10), static_cast<unsigned long>(k))); }

}  // namespace

// 1. Census counts of A(n,q), P(n,q) equal the closed-form class sizes.
std::vector<CheckResult> criterion_oracle_formula(const Options& o) {
    std::vector<CheckResult> out;
    const std::pair<int, long> cases[] = {{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}};
    for (GroupKind kind : {GroupKind::Affine, GroupKind::Parabolic}) {
        for (auto [n, q] : cases) {
            std::string name =
                "oracle-formula/" + group_name(kind) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
            Integer order = group_order(kind, n, Integer(q));
            if (order > o.max_order) {
                out.push_back(check(name, true, "skipped: order " + order.get_str() + " > max-order"));
                continue;
            }
            Census c = census(kind, n, q, o.threads);
            QContext ctx((Rational(q)));
            bool ok = c.order == order;
            std::string detail = "order " + c.order.get_str() + ", " + std::to_string(c.classes.size()) + " classes";
            for (const auto& [key, count] : c.classes) {
                RationalFormData data = to_descriptor_data({key.begin(), key.end()}, q);
                Integer expect = kind == GroupKind::Affine ? affine_count(n, ctx, data)
                                                           : parabolic_count(n, ctx, data);
                if (expect != count) {
                    ok = false;
                    detail = "count mismatch: census " + count.get_str() + " vs formula " + expect.get_str();
                    break;
                }
            }
            out.push_back(check(name, ok, detail));
        }
    }
    return out;
}

// 2. Series coefficients equal census fractions for A(n,2), GL(n,2), n <= 3.
std::vector<CheckResult> criterion_series_vs_census(const Options& o) {
    std::vector<CheckResult> out;
    QContext ctx(Rational(2));
    for (GroupKind kind : {GroupKind::Affine, GroupKind::GL}) {
        Series s = separable_series(kind, ctx, 3);
        Series c = cyclic_series(kind, ctx, 3);
        Series ss = semisimple_series(kind, ctx, 3);
        for (int n = 1; n <= 3; ++n) {
            std::string name =
                "series-vs-census/" + group_name(kind) + "(" + std::to_string(n) + ",2)";
            Integer order = group_order(kind, n, Integer(2));
            if (order > o.max_order) {
                out.push_back(check(name, true, "skipped: order exceeds max-order"));
                continue;
            }
            Census cen = census(kind, n, 2, o.threads);
            Rational den{cen.order};
            Rational fs = Rational(cen.separable) / den;
            Rational fc = Rational(cen.cyclic) / den;
            Rational fss = Rational(cen.semisimple) / den;
            bool ok = s.coeff(n) == fs && c.coeff(n) == fc && ss.coeff(n) == fss;
            out.push_back(check(name, ok,
                                "s=" + to_string(fs) + " c=" + to_string(fc) + " ss=" + to_string(fss)));
        }
    }
    return out;
}

// 3. Limits: exact separable/cyclic values; semisimple via two routes.
std::vector<CheckResult> criterion_limits(const Options&) {
    std::vector<CheckResult> out;
    QContext ctx2(Rational(2));
    Rational s_inf = limit_separable(GroupKind::Affine, ctx2);
    out.push_back(check("limits/s_A(inf,2)", s_inf == Rational(1, 4), rd(s_inf)));
    Rational c_inf = limit_cyclic(GroupKind::Affine, ctx2);
    out.push_back(check("limits/c_A(inf,2)", c_inf == Rational(31, 54), rd(c_inf)));
    for (long q : {2L, 3L, 5L}) {
        QContext ctx((Rational(q)));
        Rational eps = eps_pow10(13);
        Rational a = limit_semisimple(GroupKind::Affine, ctx, eps);
        Rational b = limit_semisimple_theta(ctx, eps);
        Rational gap = abs(a - b);
        out.push_back(check("limits/ss_A(inf," + std::to_string(q) + ")/two-routes",
                            gap < eps_pow10(12),
                            "product " + rd(a) + ", theta " + rd(b)));
    }
    return out;
}

// 4. Identity suite: Gold, allpoly, trick, Rogers-Ramanujan.
std::vector<CheckResult> criterion_identities(const Options&) {
    std::vector<CheckResult> out;
    for (long q : {2L, 3L, 5L}) {
        QContext ctx((Rational(q)));
        std::string qs = "/q=" + std::to_string(q);
        // Gold: S(u) = prod_{r>=1}(1-u/q^r) via its functional equation
        // S(u) = (1-u/q) S(u/q), plus convergence of partial products.
        Series S = euler_product_series(ctx, 40);
        Series rhs = (Series::one(40) - Series::monomial(40, 1, Rational(1) / ctx.q())) *
                     S.scale_arg(Rational(1) / ctx.q());
        bool ok = S == rhs;
        Series partial = Series::one(40);
        for (int r = 1; r <= 120; ++r)
            partial = partial * (Series::one(40) - Series::monomial(40, 1, ctx.q_pow(-r)));
        for (int i = 0; i <= 40 && ok; ++i)
            if (abs(partial.coeff(i) - S.coeff(i)) > eps_pow10(20)) ok = false;
        out.push_back(check("identities/gold" + qs, ok,
                            "functional equation to order 40; partial product R=120 within 1e-20"));
        // allpoly: prod_d (1-u^d/q^d)^{N(d,q)} = 1-u, exact as a formal series.
        Series ap = allpoly_series(ctx, 30);
        Series lin = Series::one(30) - Series::monomial(30, 1);
        out.push_back(check("identities/allpoly" + qs, ap == lin, "equals 1-u to order 30"));
        // trick: (1-u) C_A(u) = (1-u/q) S_A(u/q), exact to order 30.
        Series lhs = (Series::one(30) - Series::monomial(30, 1)) * cyclic_series(GroupKind::Affine, ctx, 30);
        Series rhs2 = (Series::one(30) - Series::monomial(30, 1, Rational(1) / ctx.q())) *
                      separable_series(GroupKind::Affine, ctx, 30).scale_arg(Rational(1) / ctx.q());
        out.push_back(check("identities/trick" + qs, lhs == rhs2, "exact to order 30"));
    }
    // Rogers-Ramanujan identities as integer series in t to order 40.
    const int D = 40;
    auto poch_t = [&](int k) {  // (t;t)_k as a series
        Series p = Series::one(D);
        for (int j = 1; j <= k; ++j) p = p * (Series::one(D) - Series::monomial(D, j));
        return p;
    };
    auto residue_product = [&](int r1, int r2) {  // prod 1/(1-t^r), r = r1, r2 mod 5
        Series den = Series::one(D);
        for (int r = 1; r <= D; ++r)
            if (r % 5 == r1 || r % 5 == r2) den = den * (Series::one(D) - Series::monomial(D, r));
        return den.inverse();
    };
    Series rr1 = Series(D), rr2 = Series(D);
    for (int k = 0; k * k <= D; ++k)
        rr1 = rr1 + Series::monomial(D, k * k) * poch_t(k).inverse();
    for (int k = 0; k * (k + 1) <= D; ++k)
        rr2 = rr2 + Series::monomial(D, k * (k + 1)) * poch_t(k).inverse();
    out.push_back(check("identities/rogers-ramanujan-1", rr1 == residue_product(1, 4),
                        "sum t^{k^2}/(t)_k = prod 1/(1-t^{5m+1})(1-t^{5m+4}), order 40"));
    out.push_back(check("identities/rogers-ramanujan-2", rr2 == residue_product(2, 3),
                        "sum t^{k^2+k}/(t)_k = prod 1/(1-t^{5m+2})(1-t^{5m+3}), order 40"));
    return out;
}

// 5. Measure suite: centralizer forms, mass of N, N/M ratio.
std::vector<CheckResult> criterion_measures(const Options&) {
    std::vector<CheckResult> out;
    std::vector<Partition> small = partitions_up_to(8);
    for (long q : {2L, 3L, 4L}) {
        QContext ctx((Rational(q)));
        for (int d : {1, 2}) {
            bool ok = true;
            std::string detail = "forms 1,2 exact; form 3 within 1e-15 relative, m=60";
            for (const Partition& lam : small) {
                Rational f1 = class_size_factor(ctx, d, lam, 1);
                Rational f2 = class_size_factor(ctx, d, lam, 2);
                Rational f3 = class_size_factor(ctx, d, lam, 3, 60);
                if (f1 != f2 || abs(f3 - f2) > f2 * eps_pow10(15)) {
                    ok = false;
                    detail = "mismatch at lambda of size " + std::to_string(lam.size());
                    break;
                }
            }
            out.push_back(check("measures/useful-forms/q=" + std::to_string(q) + "/d=" + std::to_string(d),
                                ok, detail));
        }
    }
    {
        MeasureParams p(Rational(1, 2), QContext(Rational(2)));
        Rational total = 0;
        for (int n = 1; n <= 30; ++n)
            for_each_partition(n, [&](const Partition& lam) { total += measure_N(p, lam); });
        out.push_back(check("measures/N-mass/u=1/2,q=2", abs(total - 1) < eps_pow10(6),
                            "sum over |lambda| <= 30 is " + rd(total)));
    }
    for (auto [us, qv] : std::vector<std::pair<Rational, long>>{{Rational(1, 2), 2}, {Rational(2, 3), 3}}) {
        MeasureParams p(us, QContext(Rational(qv)));
        bool ok = true;
        for (int n = 1; n <= 12 && ok; ++n)
            for_each_partition(n, [&](const Partition& lam) {
                Rational lhs = measure_N(p, lam);
                Rational rhs = (p.ctx().q_pow(lam.col_height(1)) - 1) / p.u() * measure_M(p, lam);
                if (lhs != rhs) ok = false;
            });
        out.push_back(check("measures/N-vs-M/u=" + to_string(us) + ",q=" + std::to_string(qv), ok,
                            "N = (q^{lambda'_1}-1)/u * M exactly, |lambda| <= 12"));
    }
    return out;
}

// 6. Markov equivalence: path probabilities equal N exactly; rows sum to 1.
std::vector<CheckResult> criterion_markov(const Options&) {
    std::vector<CheckResult> out;
    for (long q : {2L, 3L}) {
        for (Rational u : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
            MeasureParams p(u, QContext(Rational(q)));
            bool ok = true;
            for (int n = 1; n <= 6 && ok; ++n)
                for_each_partition(n, [&](const Partition& lam) {
                    Rational path = markov_initial(p, lam.col_height(1));
                    for (int s = 2; s <= lam.first_part() + 1; ++s)
                        path *= markov_kernel(p, lam.col_height(s - 1), lam.col_height(s));
                    if (path != measure_N(p, lam)) ok = false;
                });
            bool rows = true;
            for (int a = 0; a <= 12; ++a) {
                Rational sum = 0;
                for (int b = 0; b <= a; ++b) sum += markov_kernel(p, a, b);
                if (sum != 1) rows = false;
            }
            out.push_back(check("markov/u=" + to_string(u) + ",q=" + std::to_string(q), ok && rows,
                                "Q*K path = N for |lambda| <= 6; rows sum to 1 for a <= 12"));
        }
    }
    return out;
}

namespace {

// Total-variation distance between an empirical histogram and an exact law,
// both restricted to |lambda| <= bound with the excess lumped together.
Rational tv_distance(const std::map<Partition, long>& counts, long total, long rest,
                     const std::map<Partition, Rational>& exact) {
    Rational tv = 0;
    Rational exact_mass = 0;
    std::map<Partition, long> merged = counts;
    for (const auto& [lam, p] : exact) merged.try_emplace(lam, 0);
    for (const auto& [lam, cnt] : merged) {
        auto it = exact.find(lam);
        Rational e = it == exact.end() ? Rational(0) : it->second;
        exact_mass += e;
        tv += abs(make_rational(cnt, total) - e);
    }
    tv += abs(make_rational(rest, total) - (1 - exact_mass));
    return tv / 2;
}

}  // namespace

// 7. Sampler statistics: TV < 0.01 against the exact laws.
std::vector<CheckResult> criterion_samplers(const Options& o) {
    std::vector<CheckResult> out;
    MeasureParams p(Rational(1, 2), QContext(Rational(2)));
    const int bound = 10;

    std::map<Partition, Rational> exact_M, exact_N;
    for (const Partition& lam : partitions_up_to(bound)) {
        exact_M[lam] = measure_M(p, lam);
        if (!lam.empty()) exact_N[lam] = measure_N(p, lam);
    }

    struct Draw {
        const char* name;
        std::function<Partition(RandomStream&)> draw;
        const std::map<Partition, Rational>* law;
    };
    std::vector<Draw> samplers = {
        {"yta", [&](RandomStream& rs) { return sample_M_yta(p, rs).shape; }, &exact_M},
        {"terminating", [&](RandomStream& rs) { return sample_M_terminating(p, rs).shape; }, &exact_M},
        {"affine", [&](RandomStream& rs) { return sample_N_affine(p, rs).shape; }, &exact_N},
        {"markov", [&](RandomStream& rs) { return sample_N_markov(p, rs); }, &exact_N},
    };
    for (std::size_t i = 0; i < samplers.size(); ++i) {
        RandomStream rs(o.seed, i);
        std::map<Partition, long> counts;
        long rest = 0;
        for (long s = 0; s < o.samples; ++s) {
            Partition lam = samplers[i].draw(rs);
            if (lam.size() <= bound)
                ++counts[lam];
            else
                ++rest;
        }
        Rational tv = tv_distance(counts, o.samples, rest, *samplers[i].law);
        out.push_back(check(std::string("samplers/tv/") + samplers[i].name, tv < Rational(1, 100),
                            "TV = " + rd(tv) + " on |lambda| <= 10, " + std::to_string(o.samples) +
                                " samples"));
    }
    // Conditional sampler vs the exact conditional law (u-free).
    for (int n : {2, 3}) {
        std::map<Partition, Rational> exact;
        Rational mass = 0;
        for_each_partition(n + 1, [&](const Partition& lam) {
            exact[lam] = measure_N(p, lam);
            mass += exact[lam];
        });
        for (auto& [lam, e] : exact) e /= mass;
        RandomStream rs(o.seed, 100 + static_cast<std::uint64_t>(n));
        std::map<Partition, long> counts;
        for (long s = 0; s < o.samples; ++s) ++counts[sample_N_given_size(n, p.ctx(), rs).shape];
        Rational tv = tv_distance(counts, o.samples, 0, exact);
        out.push_back(check("samplers/tv/conditional/n=" + std::to_string(n), tv < Rational(1, 100),
                            "TV = " + rd(tv) + " vs exact conditional law"));
    }
    return out;
}

// 8. Fixed-space distribution and unipotent rank counts.
std::vector<CheckResult> criterion_fixed_space(const Options& o) {
    std::vector<CheckResult> out;
    for (long q : {2L, 3L}) {
        QContext ctx((Rational(q)));
        bool ok = true;
        for (int n = 0; n <= 6 && ok; ++n) {
            Rational sum = 0;
            for (int k = 1; k <= n + 1; ++k) sum += fixed_space_prob(n, k, ctx);
            if (sum != 1) ok = false;
        }
        out.push_back(check("fixed-space/sum-to-1/q=" + std::to_string(q), ok,
                            "sum_k P_{A,n}(k) = 1 exactly, n <= 6"));
        bool uok = true;
        for (int n = 0; n <= 5 && uok; ++n) {
            Integer total = 0;
            for (int k = 1; k <= n + 1; ++k) total += unipotent_rank_count(n, k, ctx);
            if (total != int_pow(Integer(q), static_cast<unsigned long>(n) * static_cast<unsigned long>(n)))
                uok = false;
        }
        out.push_back(check("fixed-space/unipotent-total/q=" + std::to_string(q), uok,
                            "sum_k counts = q^{n^2}, n <= 5"));
    }
    QContext ctx2(Rational(2));
    {
        bool ok = fixed_space_prob(1, 1, ctx2) == Rational(1, 2) && fixed_space_prob(1, 2, ctx2) == Rational(1, 2);
        Census c = census(GroupKind::Affine, 1, 2, o.threads);
        for (int k = 1; k <= 2 && ok; ++k) {
            auto it = c.fixed_dim.find(k);
            Rational emp = it == c.fixed_dim.end() ? Rational(0) : Rational(it->second) / Rational(c.order);
            if (emp != fixed_space_prob(1, k, ctx2)) ok = false;
        }
        out.push_back(check("fixed-space/P_{A,1}(.,2)", ok, "(1/2, 1/2), matches A(1,2) census"));
    }
    {
        std::string name = "fixed-space/unipotent-census/A(3,2)";
        if (group_order(GroupKind::Affine, 3, Integer(2)) > o.max_order) {
            out.push_back(check(name, true, "skipped: order exceeds max-order"));
        } else {
            Census c = census(GroupKind::Affine, 3, 2, o.threads);
            PolyFq z1({1, 1}, 2);
            std::map<int, Integer> by_dim;
            for (const auto& [key, count] : c.classes)
                if (key.size() == 1 && key[0].first == z1) by_dim[key[0].second.num_parts()] += count;
            bool ok = true;
            std::string detail;
            for (int k = 1; k <= 4; ++k) {
                Integer want = unipotent_rank_count(3, k, ctx2);
                Integer got = by_dim.count(k) ? by_dim[k] : Integer(0);
                if (want != got) ok = false;
                detail += (k > 1 ? " " : "") + std::to_string(k) + ":" + got.get_str();
            }
            out.push_back(check(name, ok, "counts by fixed dimension: " + detail));
        }
    }
    return out;
}

// 9. Convergence bounds for n <= 25, q in {2,3,5}.
std::vector<CheckResult> criterion_bounds(const Options&) {
    std::vector<CheckResult> out;
    for (long q : {2L, 3L, 5L}) {
        QContext ctx((Rational(q)));
        Series c = cyclic_series(GroupKind::Affine, ctx, 25);
        Series s = separable_series(GroupKind::Affine, ctx, 25);
        Rational c_inf = limit_cyclic(GroupKind::Affine, ctx);
        Rational s_inf = limit_separable(GroupKind::Affine, ctx);
        bool cok = true, sok = true;
        for (int n = 0; n <= 25; ++n) {
            if (abs(c.coeff(n) - c_inf) > bound_cyclic(n, ctx)) cok = false;
            if (abs(s.coeff(n) - s_inf) > bound_separable(n, ctx)) sok = false;
        }
        out.push_back(check("bounds/cyclic/q=" + std::to_string(q), cok,
                            "|c_A(n,q) - c_A(inf,q)| <= 1/(q^{n+1}(1-1/q)), n <= 25"));
        out.push_back(check("bounds/separable/q=" + std::to_string(q), sok,
                            "Wall-type bound with K+ at k=1, n <= 25"));
    }
    return out;
}

std::vector<std::string> suite_names() {
    return {"identities", "measures", "samplers", "oracle", "bounds"};
}

std::vector<CheckResult> run_suite(const std::string& name, const Options& o) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };
    if (name == "identities") {
        append(criterion_identities(o));
    } else if (name == "measures") {
        append(criterion_measures(o));
        append(criterion_markov(o));
    } else if (name == "samplers") {
        append(criterion_samplers(o));
    } else if (name == "oracle") {
        append(criterion_oracle_formula(o));
        append(criterion_series_vs_census(o));
    } else if (name == "bounds") {
        append(criterion_limits(o));
        append(criterion_fixed_space(o));
        append(criterion_bounds(o));
    } else {
        throw std::invalid_argument("unknown verify suite: " + name);
    }
    return out;
}

}  // namespace affine::verify
