#include "affine/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace affine {

namespace {

// Shared sieve cache; censuses hit the same (q, d) pairs millions of times.
const std::vector<PolyFq>& cached_irreducibles(long q, int d) {
    static std::mutex lock;
    static std::map<std::pair<long, int>, std::vector<PolyFq>> cache;
    std::scoped_lock guard(lock);
    auto [it, inserted] = cache.try_emplace({q, d});
    if (inserted) it->second = irreducible_polys(q, d);
    return it->second;
}

Partition kernel_filtration(const MatrixFq& alpha, const PolyFq& phi, int expected_size) {
    int d = phi.degree();
    MatrixFq step = phi.eval(alpha);
    MatrixFq power = step;
    std::vector<int> heights;
    int prev = 0;
    while (true) {
        int ker = power.kernel_dim();
        if (ker == prev) break;
        if ((ker - prev) % d != 0) throw std::logic_error("kernel jump not divisible by degree");
        heights.push_back((ker - prev) / d);
        prev = ker;
        if (prev == d * expected_size) break;
        power = power * step;
    }
    Partition lambda = conjugate(Partition(heights));
    if (lambda.size() != expected_size)
        throw std::logic_error("kernel filtration disagrees with factor multiplicity");
    return lambda;
}

}  // namespace

std::map<PolyFq, Partition> rational_form_data(const MatrixFq& alpha) {
    long p = alpha.modulus();
    PolyFq chi = char_poly(alpha);
    if (chi.coeff(0) == 0) throw std::domain_error("matrix is singular");
    // Factor the characteristic polynomial by trial division, ascending degree.
    std::map<PolyFq, int> multiplicity;
    PolyFq rest = chi;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        for (const auto& phi : cached_irreducibles(p, d)) {
            while (true) {
                auto [quot, rem] = rest.divmod(phi);
                if (!rem.is_zero()) break;
                rest = quot;
                ++multiplicity[phi];
            }
            if (rest.degree() < 2 * d) break;
        }
    }
    if (rest.degree() >= 1) ++multiplicity[rest];  // leftover is irreducible

    std::map<PolyFq, Partition> out;
    for (const auto& [phi, e] : multiplicity)
        out.emplace(phi, kernel_filtration(alpha, phi, e));
    return out;
}

RationalFormData to_descriptor_data(const std::map<PolyFq, Partition>& data, long q) {
    RationalFormData out;
    std::map<int, long> next_index;
    for (const auto& [phi, lambda] : data) {
        if (phi.degree() == 1) {
            long a = (q - phi.coeff(0)) % q;
            if (a == 0) throw std::invalid_argument("z carries no partition");
            out.set(linear_slot(a), lambda);
        } else {
            out.set(generic_slot(phi.degree(), next_index[phi.degree()]++), lambda);
        }
    }
    return out;
}

namespace {

struct CandidateSpace {
    int matrix_dim;   // dimension of the embedded matrix handed to visitors
    int gl_dim;       // dimension of the GL block
    int vec_len;      // translation part length (Affine/Parabolic)
    bool has_scalar;  // Parabolic corner scalar
    long total;       // number of candidate codes
};

CandidateSpace candidate_space(GroupKind kind, int n, long q, long cap) {
    if (n < 0 || (kind == GroupKind::GL && n < 1))
        throw std::invalid_argument("dimension out of range");
    Integer order = group_order(kind, n, Integer(q));
    if (order > cap) throw CapExceeded("group order exceeds the enumeration cap");
    CandidateSpace s{};
    s.gl_dim = kind == GroupKind::GL ? n : n;
    s.matrix_dim = kind == GroupKind::GL ? n : n + 1;
    s.vec_len = kind == GroupKind::GL ? 0 : n;
    s.has_scalar = kind == GroupKind::Parabolic;
    Integer total = s.has_scalar ? Integer(q - 1) : Integer(1);
    for (int i = 0; i < s.vec_len + s.gl_dim * s.gl_dim; ++i) total *= q;
    // The candidate space exceeds the group by at most the inverse density
    // of invertible matrices, so it stays comfortably within long range.
    if (!total.fits_slong_p()) throw CapExceeded("candidate space exceeds long range");
    s.total = total.get_si();
    return s;
}

}  // namespace

void for_each_element(GroupKind kind, int n, long q, long shard, long num_shards,
                      const std::function<void(const MatrixFq&)>& visit, long cap) {
    if (num_shards < 1 || shard < 0 || shard >= num_shards)
        throw std::invalid_argument("bad shard spec");
    CandidateSpace s = candidate_space(kind, n, q, cap);
    int gd = s.gl_dim;
    for (long code = shard; code < s.total; code += num_shards) {
        long rest = code;
        long scalar = 1;
        if (s.has_scalar) {
            scalar = 1 + rest % (q - 1);
            rest /= (q - 1);
        }
        std::vector<long> vec(static_cast<std::size_t>(s.vec_len));
        for (auto& v : vec) {
            v = rest % q;
            rest /= q;
        }
        bool gl_block = gd > 0;
        MatrixFq m(std::max(gd, 1), q);
        if (gl_block) {
            for (int i = 0; i < gd; ++i)
                for (int j = 0; j < gd; ++j) {
                    m.set(i, j, rest % q);
                    rest /= q;
                }
            if (!m.invertible()) continue;
        }
        if (kind == GroupKind::GL) {
            visit(m);
            continue;
        }
        MatrixFq em(n + 1, q);
        em.set(0, 0, scalar);
        for (int j = 0; j < s.vec_len; ++j) em.set(0, j + 1, vec[static_cast<std::size_t>(j)]);
        if (gl_block)
            for (int i = 0; i < gd; ++i)
                for (int j = 0; j < gd; ++j) em.set(i + 1, j + 1, m.at(i, j));
        visit(em);
    }
}

void Census::merge(const Census& other) {
    if (kind != other.kind || n != other.n || q != other.q)
        throw std::invalid_argument("cannot merge censuses of different groups");
    order += other.order;
    for (const auto& [k, v] : other.classes) classes[k] += v;
    separable += other.separable;
    cyclic += other.cyclic;
    semisimple += other.semisimple;
    unipotent += other.unipotent;
    for (const auto& [k, v] : other.fixed_dim) fixed_dim[k] += v;
    for (const auto& [k, v] : other.z1_marginal) z1_marginal[k] += v;
}

Census census_shard(GroupKind kind, int n, long q, long shard, long num_shards, long cap) {
    Census c;
    c.kind = kind;
    c.n = n;
    c.q = q;
    PolyFq z_minus_1({q - 1, 1}, q);
    for_each_element(
        kind, n, q, shard, num_shards,
        [&](const MatrixFq& alpha) {
            auto data = rational_form_data(alpha);
            RcfKey key(data.begin(), data.end());
            c.classes[key] += 1;
            c.order += 1;
            bool sep = true, cyc = true, ss = true;
            const Partition* z1 = nullptr;
            for (const auto& [phi, lambda] : data) {
                if (lambda.size() > 1) sep = false;
                if (lambda.num_parts() > 1) cyc = false;
                if (lambda.first_part() > 1) ss = false;
                if (phi == z_minus_1) z1 = &lambda;
            }
            if (sep) c.separable += 1;
            if (cyc) c.cyclic += 1;
            if (ss) c.semisimple += 1;
            if (data.size() == 1 && z1 != nullptr) c.unipotent += 1;
            c.fixed_dim[z1 ? z1->num_parts() : 0] += 1;
            c.z1_marginal[z1 ? *z1 : Partition()] += 1;
        },
        cap);
    return c;
}

Census census(GroupKind kind, int n, long q, int threads, long cap) {
    if (threads < 1) threads = 1;
    if (threads == 1) return census_shard(kind, n, q, 0, 1, cap);
    // Warm the sieve cache before forking so threads only read it.
    candidate_space(kind, n, q, cap);
    int dim = kind == GroupKind::GL ? n : n + 1;
    for (int d = 1; d <= dim; ++d) cached_irreducibles(q, d);
    std::vector<Census> parts(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            parts[static_cast<std::size_t>(t)] = census_shard(kind, n, q, t, threads, cap);
        });
    for (auto& th : pool) th.join();
    Census total = std::move(parts[0]);
    for (int t = 1; t < threads; ++t) total.merge(parts[static_cast<std::size_t>(t)]);
    return total;
}

namespace {

// Centralizer order in GL of the class with data {lambda_phi}:
// prod_phi q^{deg sum (lam'_i)^2} prod_i (1/q^deg)_{m_i}, each factor integral.
Integer gl_centralizer_order(const QContext& ctx, const std::map<PolyFq, Partition>& data) {
    Rational z = 1;
    for (const auto& [phi, lambda] : data)
        z *= class_size_factor(ctx, phi.degree(), lambda, 2);
    if (z.get_den() != 1) throw std::logic_error("GL centralizer order not integral");
    return Integer(z.get_num());
}

}  // namespace

CentralizerReport centralizer_census(int n, long q, long cap) {
    CentralizerReport report;
    report.n = n;
    report.q = q;
    report.group_order = group_order(GroupKind::Affine, n, Integer(q));

    std::vector<MatrixFq> elems;
    for_each_element(GroupKind::Affine, n, q, 0, 1,
                     [&](const MatrixFq& m) { elems.push_back(m); }, cap);
    std::map<MatrixFq, std::size_t> position;
    for (std::size_t i = 0; i < elems.size(); ++i) position.emplace(elems[i], i);

    QContext ctx((Rational(q)));
    PolyFq z_minus_1({q - 1, 1}, q);
    std::vector<bool> assigned(elems.size(), false);

    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (assigned[i]) continue;
        const MatrixFq& x = elems[i];
        CentralizerClass cls;
        Integer commuting = 0;
        for (const auto& g : elems) {
            MatrixFq conj = g * x * g.inverse();
            if (conj == x) commuting += 1;
            std::size_t pos = position.at(conj);
            if (!assigned[pos]) {
                assigned[pos] = true;
                cls.class_size += 1;
            }
        }
        cls.centralizer = commuting;
        if (cls.centralizer * cls.class_size != Integer(static_cast<long>(elems.size())))
            throw std::logic_error("orbit-stabilizer mismatch in centralizer census");

        auto data = rational_form_data(x);
        cls.key = RcfKey(data.begin(), data.end());
        auto z1_it = data.find(z_minus_1);
        if (z1_it == data.end()) throw std::logic_error("affine element without z-1 slot");
        const Partition& z1 = z1_it->second;

        std::vector<int> seen;
        for (int idx = z1.num_parts(); idx >= 1; --idx) {  // ascending part sizes
            int k = z1.part(idx);
            if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
            seen.push_back(k);
            // lambda-bar: remove one row of length k from the z-1 partition.
            std::vector<int> rest_parts;
            bool removed = false;
            for (int j = 1; j <= z1.num_parts(); ++j) {
                if (!removed && z1.part(j) == k) {
                    removed = true;
                    continue;
                }
                rest_parts.push_back(z1.part(j));
            }
            Partition bar(rest_parts);
            auto bar_data = data;
            if (bar.empty())
                bar_data.erase(z_minus_1);
            else
                bar_data[z_minus_1] = bar;

            Integer zgl = gl_centralizer_order(ctx, bar_data);
            long expo_common = k - 1;
            for (int m = 1; m <= k - 1; ++m) expo_common += 2L * m * bar.multiplicity(m);
            long printed_tail = 0, unbounded_tail = 0;
            for (int m = k; m <= bar.first_part(); ++m) {
                unbounded_tail += bar.multiplicity(m);
                if (m <= n - k) printed_tail += bar.multiplicity(m);
            }
            cls.row_choices.push_back(k);
            cls.printed.push_back(
                zgl * int_pow(Integer(q), static_cast<unsigned long>(
                                              expo_common + (2L * k - 1) * printed_tail)));
            cls.unbounded.push_back(
                zgl * int_pow(Integer(q), static_cast<unsigned long>(
                                              expo_common + (2L * k - 1) * unbounded_tail)));
        }
        report.classes.push_back(std::move(cls));
    }

    // Group classes by rational form and compare centralizer multisets.
    std::map<RcfKey, std::vector<Integer>> empirical, want_printed, want_unbounded;
    for (const auto& cls : report.classes) {
        empirical[cls.key].push_back(cls.centralizer);
        auto& p = want_printed[cls.key];
        auto& u = want_unbounded[cls.key];
        if (p.empty()) {
            p = cls.printed;
            u = cls.unbounded;
        }
    }
    auto consistent = [&](std::map<RcfKey, std::vector<Integer>>& want) {
        for (auto& [key, have] : empirical) {
            auto expect = want[key];
            if (have.size() != expect.size()) return false;
            std::sort(have.begin(), have.end());
            std::sort(expect.begin(), expect.end());
            if (have != expect) return false;
        }
        return true;
    };
    report.printed_consistent = consistent(want_printed);
    report.unbounded_consistent = consistent(want_unbounded);
    return report;
}

}  // namespace affine
