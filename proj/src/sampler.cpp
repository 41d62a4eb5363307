#include "affine/sampler.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace affine {

namespace {

// Safety valve for the interval-refinement comparisons. The compared
// quantities differ on a set of full measure, so a tie deep enough to hit
// this is a logic error rather than bad luck.
constexpr int kMaxRefinement = 4096;

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream & 0xffffffffu),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

RandomStream::RandomStream(std::vector<bool> preset)
    : preset_(std::move(preset)), use_preset_(true) {}

bool RandomStream::next_bit() {
    if (use_preset_) {
        if (preset_pos_ >= preset_.size())
            throw std::runtime_error("preset bit stream exhausted");
        return preset_[preset_pos_++];
    }
    if (bits_left_ == 0) {
        buffer_ = engine_();
        bits_left_ = 64;
    }
    bool b = (buffer_ & 1) != 0;
    buffer_ >>= 1;
    --bits_left_;
    return b;
}

void LazyUniform::refine() { bits_.push_back(src_->next_bit()); }

bool LazyUniform::bit(int k) {
    while (static_cast<int>(bits_.size()) < k) refine();
    return bits_[static_cast<std::size_t>(k) - 1];
}

Rational LazyUniform::lower() const {
    Rational lo = 0;
    Rational scale(1, 2);
    for (bool b : bits_) {
        if (b) lo += scale;
        scale /= 2;
    }
    return lo;
}

bool LazyUniform::less_than(const Rational& p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    // Walk the binary expansions in lockstep: double the residual of p to
    // peel its next digit, and compare with the next bit of U.
    Rational r = p;
    int k = 0;
    while (true) {
        ++k;
        if (k > kMaxRefinement) throw std::runtime_error("comparison failed to resolve");
        r *= 2;
        int digit = 0;
        if (r >= 1) {
            digit = 1;
            r -= 1;
        }
        int b = bit(k) ? 1 : 0;
        if (b < digit) return true;
        if (b > digit) return false;
        // Equal so far; if p's expansion has ended in zeros, U >= p.
        if (r == 0) return false;
    }
}

bool bernoulli(RandomStream& rs, const Rational& p) {
    LazyUniform u(rs);
    return u.less_than(p);
}

namespace {

// Shrinking bracket for the tail product prod_{r >= next} (1 - u/q^r),
// refined one factor at a time. The unexpanded tail lies between
// 1 - u/(q^{next-1}(q-1)) and 1.
class TailProductBounds {
  public:
    TailProductBounds(const QContext& ctx, Rational u, int from)
        : ctx_(&ctx), u_(std::move(u)), next_(from) {}

    void refine() {
        partial_ *= 1 - u_ / ctx_->q_pow(next_);
        ++next_;
    }

    Rational hi() const { return partial_; }

    Rational lo() const {
        Rational slack = u_ / (ctx_->q_pow(next_ - 1) * (ctx_->q() - 1));
        Rational l = partial_ * (1 - slack);
        return l < 0 ? Rational(0) : l;
    }

  private:
    const QContext* ctx_;
    Rational u_;
    int next_;
    Rational partial_{1};
};

// Decide U < t where t = prod_{r >= from} (1 - u/q^r).
bool less_than_tail_product(LazyUniform& U, const MeasureParams& p, int from) {
    TailProductBounds t(p.ctx(), p.u(), from);
    Rational pow2(1, 2);
    for (int k = 1; k <= kMaxRefinement; ++k) {
        U.bit(k);
        t.refine();
        Rational u_lo = U.lower();
        Rational u_hi = u_lo + pow2;
        if (u_hi <= t.lo()) return true;
        if (u_lo >= t.hi()) return false;
        pow2 /= 2;
    }
    throw std::runtime_error("comparison failed to resolve");
}

// Decide U < (B - t)/(1 - t) with rational B and t = t^{(N)} as above,
// equivalently V < B for V = t + U(1 - t); V is increasing in both U and t.
bool less_than_rescaled(LazyUniform& U, const MeasureParams& p, int from, const Rational& B) {
    if (B >= 1) return true;
    if (B <= 0) return false;
    TailProductBounds t(p.ctx(), p.u(), from);
    Rational pow2(1, 2);
    for (int k = 1; k <= kMaxRefinement; ++k) {
        U.bit(k);
        t.refine();
        Rational u_lo = U.lower();
        Rational u_hi = u_lo + pow2;
        Rational v_lo = t.lo() + u_lo * (1 - t.lo());
        Rational v_hi = t.hi() + u_hi * (1 - t.hi());
        if (v_hi <= B) return true;
        if (v_lo >= B) return false;
        pow2 /= 2;
    }
    throw std::runtime_error("comparison failed to resolve");
}

}  // namespace

std::map<int, int> draw_heads_counts(const MeasureParams& p, RandomStream& rs, int from) {
    const QContext& ctx = p.ctx();
    std::map<int, int> counts;
    bool pending = false;  // conditioned on a head at some coin >= N
    int N = from;
    while (true) {
        LazyUniform U(rs);
        Rational g = p.u() / ctx.q_pow(N);
        int j = 0;
        if (!pending) {
            if (less_than_tail_product(U, p, N)) return counts;
            // Boundaries 1 - g^{j+1}, preceded by the stop interval whose
            // mass (1-g) * t^{(N+1)} was just excluded; landing below
            // 1 - g means a_N = 0 with a head still owed later.
            Rational gpow = g;
            while (!U.less_than(1 - gpow)) {
                ++j;
                gpow *= g;
            }
        } else {
            // No stop interval: [0,1] is cut at (B_j - t^{(N)})/(1 - t^{(N)})
            // with B_j = 1 - g^{j+1}.
            Rational gpow = g;
            while (!less_than_rescaled(U, p, N, 1 - gpow)) {
                ++j;
                gpow *= g;
            }
        }
        if (j > 0) {
            counts[N] = j;
            pending = false;
        } else {
            pending = true;
        }
        ++N;
    }
}

Rational yta_column_mass(const QContext& ctx, const Partition& lambda, int N, int s) {
    if (s < 1) throw std::invalid_argument("column index must be positive");
    Rational denom = ctx.q_pow(N) - 1;
    if (s == 1) return (ctx.q_pow(N - lambda.col_height(1)) - 1) / denom;
    return (ctx.q_pow(N - lambda.col_height(s)) - ctx.q_pow(N - lambda.col_height(s - 1))) / denom;
}

Rational affine_column_mass(const QContext& ctx, const Partition& lambda, int s) {
    if (s < 1) throw std::invalid_argument("column index must be positive");
    if (s == 1) return ctx.q_pow(-lambda.col_height(1));
    return ctx.q_pow(-lambda.col_height(s)) - ctx.q_pow(-lambda.col_height(s - 1));
}

Rational edge_weight(const MeasureParams& p, const Partition& lambda, int s) {
    const QContext& ctx = p.ctx();
    int h1 = lambda.col_height(1);
    if (s == 1) {
        return p.u() / (ctx.q_pow(h1) * (ctx.q_pow(h1 + 1) - 1));
    }
    int hs = lambda.col_height(s);
    int hp = lambda.col_height(s - 1);
    if (hs >= hp) throw std::invalid_argument("column is not addable");
    return p.u() * (ctx.q_pow(-hs) - ctx.q_pow(-hp)) / (ctx.q_pow(h1) - 1);
}

Rational path_probability(const MeasureParams& p, const TableauPath& path, bool affine_final) {
    Rational prob = p.prefactor();
    Partition lambda;
    for (std::size_t i = 0; i < path.columns.size(); ++i) {
        int s = path.columns[i];
        bool last = (i + 1 == path.columns.size());
        if (affine_final && last) {
            prob *= affine_column_mass(p.ctx(), lambda, s);
        } else {
            prob *= edge_weight(p, lambda, s);
        }
        lambda = add_to_column(lambda, s);
    }
    if (lambda != path.shape) throw std::invalid_argument("path does not build its shape");
    return prob;
}

namespace {

// Step 2b of the coin algorithm: pick the column for the new box.
int choose_column_yta(const QContext& ctx, const Partition& lambda, int N, RandomStream& rs) {
    auto cols = addable_columns(lambda);
    LazyUniform U(rs);
    Rational cum = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i + 1 == cols.size()) return cols[i];  // masses sum to exactly 1
        cum += yta_column_mass(ctx, lambda, N, cols[i]);
        if (U.less_than(cum)) return cols[i];
    }
    throw std::logic_error("column choice fell through");
}

int choose_column_affine(const QContext& ctx, const Partition& lambda, RandomStream& rs) {
    auto cols = addable_columns(lambda);
    LazyUniform U(rs);
    Rational cum = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i + 1 == cols.size()) return cols[i];
        cum += affine_column_mass(ctx, lambda, cols[i]);
        if (U.less_than(cum)) return cols[i];
    }
    throw std::logic_error("column choice fell through");
}

// Grow the shape from a full table of heads counts, coins in ascending order.
TableauPath grow_from_counts(const MeasureParams& p, const std::map<int, int>& counts,
                             RandomStream& rs) {
    TableauPath path;
    Partition lambda;
    for (const auto& [N, a] : counts) {
        for (int i = 0; i < a; ++i) {
            int s = choose_column_yta(p.ctx(), lambda, N, rs);
            lambda = add_to_column(lambda, s);
            path.columns.push_back(s);
        }
    }
    path.shape = lambda;
    return path;
}

}  // namespace

TableauPath sample_M_yta(const MeasureParams& p, RandomStream& rs, int coin_cap) {
    if (coin_cap < 1) throw std::invalid_argument("coin_cap must be at least 1");
    const QContext& ctx = p.ctx();
    std::map<int, int> counts;
    for (int N = 1; N <= coin_cap; ++N) {
        Rational h = p.u() / ctx.q_pow(N);
        int a = 0;
        while (bernoulli(rs, h)) ++a;
        if (a > 0) counts[N] = a;
    }
    // Coins beyond the cap almost never land heads; fold them in exactly
    // through the stopping-interval draw.
    for (const auto& [N, a] : draw_heads_counts(p, rs, coin_cap + 1)) counts[N] = a;
    return grow_from_counts(p, counts, rs);
}

TableauPath sample_M_terminating(const MeasureParams& p, RandomStream& rs) {
    return grow_from_counts(p, draw_heads_counts(p, rs, 1), rs);
}

TableauPath sample_N_affine(const MeasureParams& p, RandomStream& rs) {
    TableauPath path = sample_M_yta(p, rs);
    int s = choose_column_affine(p.ctx(), path.shape, rs);
    path.shape = add_to_column(path.shape, s);
    path.columns.push_back(s);
    return path;
}

Partition sample_N_markov(const MeasureParams& p, RandomStream& rs) {
    // First column height from the initial law, then successive heights
    // from the kernel until it dies at zero.
    constexpr int kHeightCap = 512;
    LazyUniform U(rs);
    Rational cum = 0;
    int a = 0;
    for (int cand = 1; cand <= kHeightCap; ++cand) {
        cum += markov_initial(p, cand);
        if (U.less_than(cum)) {
            a = cand;
            break;
        }
    }
    if (a == 0) throw std::runtime_error("initial Markov draw exceeded height cap");
    std::vector<int> heights{a};
    while (true) {
        LazyUniform V(rs);
        Rational c = 0;
        int chosen = heights.back();  // row masses sum to exactly 1
        for (int b = 0; b < heights.back(); ++b) {
            c += markov_kernel(p, heights.back(), b);
            if (V.less_than(c)) {
                chosen = b;
                break;
            }
        }
        if (chosen == 0) break;
        heights.push_back(chosen);
    }
    return conjugate(Partition(heights));
}

TableauPath sample_N_given_size(int n, const QContext& ctx, RandomStream& rs) {
    if (n < 0) throw std::invalid_argument("size must be nonnegative");
    TableauPath path;
    Partition lambda;
    int N = 1;
    int remaining = n;
    while (remaining > 0) {
        Rational h = 1 - ctx.q_pow(-remaining);
        while (!bernoulli(rs, h)) ++N;
        int s = choose_column_yta(ctx, lambda, N, rs);
        lambda = add_to_column(lambda, s);
        path.columns.push_back(s);
        --remaining;
    }
    int s = choose_column_affine(ctx, lambda, rs);
    lambda = add_to_column(lambda, s);
    path.columns.push_back(s);
    path.shape = lambda;
    return path;
}

}  // namespace affine
