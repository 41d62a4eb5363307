#include "affine/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "affine/numeric.hpp"

namespace affine {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("Partition::part: index is 1-based");
    return i <= num_parts() ? parts_[i - 1] : 0;
}

int Partition::col_height(int s) const {
    if (s < 1) throw std::invalid_argument("Partition::col_height: index is 1-based");
    int h = 0;
    while (h < num_parts() && parts_[h] >= s) ++h;
    return h;
}

int Partition::multiplicity(int i) const {
    int m = 0;
    for (int p : parts_) m += (p == i);
    return m;
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    cols.reserve(p.first_part());
    for (int s = 1; s <= p.first_part(); ++s) cols.push_back(p.col_height(s));
    return Partition(std::move(cols));
}

long n_stat(const Partition& p) {
    long n = 0;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) n += static_cast<long>(i) * parts[i];
    return n;
}

Partition add_to_column(const Partition& p, int s) {
    if (s < 1) throw std::invalid_argument("add_to_column: column index is 1-based");
    if (s > 1 && p.col_height(s) >= p.col_height(s - 1)) {
        throw std::invalid_argument("add_to_column: column " + std::to_string(s) +
                                    " is not addable");
    }
    // The new box extends row lambda'_s + 1 from length s-1 to s.
    int row = p.col_height(s) + 1;
    std::vector<int> parts = p.parts();
    if (row > p.num_parts()) {
        parts.push_back(s);  // only reachable with s == 1
    } else {
        parts[row - 1] += 1;
    }
    return Partition(std::move(parts));
}

Partition remove_from_column(const Partition& p, int s) {
    if (s < 1) throw std::invalid_argument("remove_from_column: column index is 1-based");
    if (p.col_height(s) <= p.col_height(s + 1)) {
        throw std::invalid_argument("remove_from_column: column " + std::to_string(s) +
                                    " has no removable box");
    }
    int row = p.col_height(s);  // bottom row of column s, which has length exactly s
    std::vector<int> parts = p.parts();
    parts[row - 1] -= 1;
    if (parts[row - 1] == 0) parts.erase(parts.begin() + (row - 1));
    return Partition(std::move(parts));
}

std::vector<int> addable_columns(const Partition& p) {
    std::vector<int> cols{1};
    for (int s = 2; s <= p.first_part() + 1; ++s) {
        if (p.col_height(s) < p.col_height(s - 1)) cols.push_back(s);
    }
    return cols;
}

std::vector<int> removable_columns(const Partition& p) {
    std::vector<int> cols;
    for (int s = 1; s <= p.first_part(); ++s) {
        if (p.col_height(s) > p.col_height(s + 1)) cols.push_back(s);
    }
    return cols;
}

Partition attach_row(const Partition& p, int k) {
    if (k <= 0) throw std::invalid_argument("attach_row: part must be positive");
    std::vector<int> parts = p.parts();
    parts.insert(std::upper_bound(parts.begin(), parts.end(), k, std::greater<int>()), k);
    return Partition(std::move(parts));
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& acc,
                     const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        emit_partitions(remaining - p, p, acc, fn);
        acc.pop_back();
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n must be nonnegative");
    std::vector<int> acc;
    emit_partitions(n, n, acc, fn);
}

std::vector<Partition> enumerate_partitions(int n, int bound) {
    if (n > bound) {
        throw CapExceeded("enumerate_partitions: n = " + std::to_string(n) +
                          " exceeds bound " + std::to_string(bound));
    }
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace affine
