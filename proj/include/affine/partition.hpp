#pragma once

#include <compare>
#include <functional>
#include <vector>

namespace affine {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is valid. Parts are addressed 1-based in the combinatorial
/// conventions below; lambda'_s denotes the s-th column height (number of
/// parts >= s), so lambda'_1 is the number of parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// |lambda|, the number of boxes.
    int size() const;

    /// largest part (0 for the empty partition).
    int first_part() const { return parts_.empty() ? 0 : parts_[0]; }

    /// lambda_i, 1-based; 0 beyond the last part.
    int part(int i) const;

    /// lambda'_s = #{i : lambda_i >= s}, 1-based; 0 beyond the first row.
    int col_height(int s) const;

    /// multiplicity m_i = #{j : lambda_j == i}.
    int multiplicity(int i) const;

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

/// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

/// n(lambda) = sum_i (i-1) lambda_i.
long n_stat(const Partition& p);

/// Adds one box at the bottom of column s. Valid when s == 1 or
/// lambda'_s < lambda'_{s-1}; otherwise the result would not be a partition
/// and std::invalid_argument is thrown.
Partition add_to_column(const Partition& p, int s);

/// Removes the bottom box of column s. Valid when the diagram has a corner
/// there (lambda'_s > lambda'_{s+1}); inverse of add_to_column.
Partition remove_from_column(const Partition& p, int s);

/// Columns where a box may be added: 1 plus every s with
/// lambda'_s < lambda'_{s-1}; ascending.
std::vector<int> addable_columns(const Partition& p);

/// Columns whose bottom box may be removed; ascending.
std::vector<int> removable_columns(const Partition& p);

/// Inserts a part of size k, keeping parts sorted.
Partition attach_row(const Partition& p, int k);

/// Calls fn for every partition of n, in lexicographically decreasing order.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

/// All partitions of n in lexicographically decreasing order.
/// n is capped (default 60) to keep accidental huge enumerations from
/// exhausting memory; beyond the cap CapExceeded is thrown.
std::vector<Partition> enumerate_partitions(int n, int bound = 60);

}  // namespace affine
