#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "affine/measures.hpp"
#include "affine/partition.hpp"

namespace affine {

/// Deterministic bit source. Two streams with the same (seed, stream) pair
/// produce identical bits on every platform; distinct stream ids give
/// independent-quality streams for parallel sample batches. A preset-bit
/// constructor exists for rigging exact coin sequences in tests.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t stream = 0);
    explicit RandomStream(std::vector<bool> preset);

    bool next_bit();

  private:
    std::mt19937_64 engine_;
    std::vector<bool> preset_;
    std::size_t preset_pos_ = 0;
    bool use_preset_ = false;
    std::uint64_t buffer_ = 0;
    int bits_left_ = 0;
};

/// One uniform variate on [0,1), materialized lazily bit by bit so that
/// comparisons against exact rationals (and against numbers only known
/// through shrinking rational bounds) are decided exactly.
class LazyUniform {
  public:
    explicit LazyUniform(RandomStream& src) : src_(&src) {}

    /// Exact P(U < p) = p decision for rational p.
    bool less_than(const Rational& p);

    /// Current dyadic bracket [lo, lo + 2^-bits) of the variate.
    void refine();
    Rational lower() const;
    int bits() const { return static_cast<int>(bits_.size()); }
    bool bit(int k);  // 1-based, extends as needed

  private:
    RandomStream* src_;
    std::vector<bool> bits_;
};

/// Bernoulli(p) with exact rational p, consuming one fresh variate.
bool bernoulli(RandomStream& rs, const Rational& p);

/// A tableau-building history: the column of each added box in order, and
/// the resulting shape.
struct TableauPath {
    std::vector<int> columns;
    Partition shape;
};

/// Growth-step mass at coin N: box goes to column s with probability
/// (q^{N - lambda'_1} - 1)/(q^N - 1) for s = 1 and
/// (q^{N - lambda'_s} - q^{N - lambda'_{s-1}})/(q^N - 1) for s > 1.
Rational yta_column_mass(const QContext& ctx, const Partition& lambda, int N, int s);

/// Final-box mass of the affine variant: 1/q^{lambda'_1} for s = 1 and
/// 1/q^{lambda'_s} - 1/q^{lambda'_{s-1}} for s > 1.
Rational affine_column_mass(const QContext& ctx, const Partition& lambda, int s);

/// Edge weight m_{lambda,Lambda} of adding a box in column s:
///   s = 1:  u / (q^{lambda'_1} (q^{lambda'_1 + 1} - 1))
///   s > 1:  u (q^{-lambda'_s} - q^{-lambda'_{s-1}}) / (q^{lambda'_1} - 1).
/// Summing the product of edge weights over all paths to lambda and
/// multiplying by the prefactor recovers M_{u,q}(lambda).
Rational edge_weight(const MeasureParams& p, const Partition& lambda, int s);

/// Probability that the coin-based sampler emits exactly this path; the
/// affine flag treats the last box as the affine variant's final step.
Rational path_probability(const MeasureParams& p, const TableauPath& path, bool affine_final);

/// Heads counts a_N per coin N >= from (only nonzero entries), drawn from
/// the joint law of independent geometric coins with heads chance u/q^N,
/// using the stopping-interval decomposition so the draw terminates.
std::map<int, int> draw_heads_counts(const MeasureParams& p, RandomStream& rs, int from);

/// Coin-tossing sampler for M_{u,q}. Coins up to coin_cap are tossed
/// directly; the astronomically unlikely heads beyond the cap are folded in
/// exactly through the stopping intervals.
TableauPath sample_M_yta(const MeasureParams& p, RandomStream& rs, int coin_cap = 64);

/// Interval-based variant: determines all heads counts first, then grows.
TableauPath sample_M_terminating(const MeasureParams& p, RandomStream& rs);

/// N_{u,q} sampler: M_{u,q} shape plus one affine final box.
TableauPath sample_N_affine(const MeasureParams& p, RandomStream& rs);

/// N_{u,q} sampler through the column-height Markov chain (initial law
/// markov_initial, kernel markov_kernel).
Partition sample_N_markov(const MeasureParams& p, RandomStream& rs);

/// Partition of n+1 distributed as N conditioned on size n+1; the law does
/// not depend on u, so only the q-context is taken.
TableauPath sample_N_given_size(int n, const QContext& ctx, RandomStream& rs);

}  // namespace affine
