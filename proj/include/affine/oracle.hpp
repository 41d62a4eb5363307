#pragma once

#include <functional>
#include <map>
#include <vector>

#include "affine/cycle_index.hpp"
#include "affine/ff.hpp"
#include "affine/measures.hpp"
#include "affine/partition.hpp"

namespace affine {

/// Conjugacy data of an invertible matrix: monic irreducible factor of the
/// characteristic polynomial -> partition, recovered by kernel filtration
///   lambda'_{phi,j} = (dim ker phi(alpha)^j - dim ker phi(alpha)^{j-1}) / deg phi.
/// z never appears. Throws std::domain_error on a singular matrix.
std::map<PolyFq, Partition> rational_form_data(const MatrixFq& alpha);

/// Bridge from concrete polynomials to the measure module's abstract slots:
/// z - a maps to linear_slot(a); higher-degree polynomials map to
/// generic_slot(degree, i) with i the appearance index among same-degree
/// slots in canonical polynomial order.
RationalFormData to_descriptor_data(const std::map<PolyFq, Partition>& data, long q);

/// Visits every element of the group exactly once (as (n+1)x(n+1) matrices
/// for Affine/Parabolic, embedded with first column e_1 resp. a*e_1).
/// The candidate space is indexed lexicographically; only indices congruent
/// to shard mod num_shards are visited, so sharded runs partition the group.
/// Throws CapExceeded when the group order exceeds cap.
void for_each_element(GroupKind kind, int n, long q, long shard, long num_shards,
                      const std::function<void(const MatrixFq&)>& visit,
                      long cap = 10'000'000);

/// Canonical census key: sorted (polynomial, partition) pairs.
using RcfKey = std::vector<std::pair<PolyFq, Partition>>;

/// Exhaustive conjugacy census of one group.
struct Census {
    GroupKind kind;
    int n = 0;
    long q = 0;
    Integer order = 0;  // elements seen (equals the group order when unsharded)
    std::map<RcfKey, Integer> classes;

    Integer separable = 0;   // all |lambda_phi| <= 1
    Integer cyclic = 0;      // all lambda_phi with at most one part
    Integer semisimple = 0;  // all lambda_phi with at most one column
    Integer unipotent = 0;   // char poly a power of z-1
    std::map<int, Integer> fixed_dim;            // lambda'_{z-1,1} histogram
    std::map<Partition, Integer> z1_marginal;    // lambda_{z-1} histogram

    void merge(const Census& other);
};

/// One shard of the census (see for_each_element for the sharding scheme).
Census census_shard(GroupKind kind, int n, long q, long shard, long num_shards,
                    long cap = 10'000'000);

/// Full census, optionally spread over threads (shard t of `threads`).
Census census(GroupKind kind, int n, long q, int threads = 1, long cap = 10'000'000);

/// Empirical adjudication of the affine centralizer-order formula: conjugacy
/// classes of A(n,q) by orbit partitioning, centralizer orders by direct
/// commuting-element counts, compared per class against the formula with its
/// printed truncated multiplicity sum (sum_{i=k}^{n-k} m_i) and against the
/// variant summing all i >= k.
struct CentralizerClass {
    RcfKey key;              // GL(n+1,q) rational form of the class
    Integer class_size = 0;
    Integer centralizer = 0;           // |G| / class_size, verified by counting
    std::vector<int> row_choices;      // admissible k (rows removable from lambda_{z-1})
    std::vector<Integer> printed;      // formula predictions per admissible k
    std::vector<Integer> unbounded;    // same with the sum over all i >= k
};

struct CentralizerReport {
    int n = 0;
    long q = 0;
    Integer group_order = 0;
    std::vector<CentralizerClass> classes;
    // Multiset comparison across classes sharing a rational form; true when
    // every empirical centralizer order is matched by the formula variant.
    bool printed_consistent = false;
    bool unbounded_consistent = false;
};

CentralizerReport centralizer_census(int n, long q, long cap = 4000);

}  // namespace affine
