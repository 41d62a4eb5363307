#include <doctest.h>

#include <algorithm>
#include <vector>

#include "affine/numeric.hpp"
#include "affine/partition.hpp"

using namespace affine;

namespace {

// p(n) by Euler's pentagonal-number recurrence, independent of the
// enumeration under test.
std::vector<long> partition_counts(int up_to) {
    std::vector<long> p(up_to + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= up_to; ++n) {
        long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) total += sign * p[n - g1];
            if (g2 <= n) total += sign * p[n - g2];
        }
        p[n] = total;
    }
    return p;
}

}  // namespace

TEST_CASE("partition basic accessors") {
    Partition empty;
    CHECK(empty.empty());
    CHECK(empty.size() == 0);
    CHECK(empty.first_part() == 0);
    CHECK(empty.num_parts() == 0);
    CHECK(empty.col_height(1) == 0);

    Partition lam({4, 2, 1});
    CHECK(lam.size() == 7);
    CHECK(lam.num_parts() == 3);
    CHECK(lam.first_part() == 4);
    CHECK(lam.part(1) == 4);
    CHECK(lam.part(2) == 2);
    CHECK(lam.part(3) == 1);
    CHECK(lam.part(4) == 0);
    CHECK(lam.col_height(1) == 3);
    CHECK(lam.col_height(2) == 2);
    CHECK(lam.col_height(3) == 1);
    CHECK(lam.col_height(4) == 1);
    CHECK(lam.col_height(5) == 0);
    CHECK(lam.multiplicity(1) == 1);
    CHECK(lam.multiplicity(2) == 1);
    CHECK(lam.multiplicity(3) == 0);
    CHECK(lam.multiplicity(4) == 1);

    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
}

TEST_CASE("enumeration counts match the pentagonal recurrence") {
    auto counts = partition_counts(40);
    for (int n = 0; n <= 40; ++n) {
        long seen = 0;
        for_each_partition(n, [&](const Partition&) { ++seen; });
        CHECK(seen == counts[n]);
    }
    // spot value everyone knows
    CHECK(counts[10] == 42);
}

TEST_CASE("enumeration order is lexicographically decreasing") {
    for (int n = 1; n <= 12; ++n) {
        auto all = enumerate_partitions(n);
        CHECK(all.front() == Partition({n}));
        CHECK(all.back() == Partition(std::vector<int>(n, 1)));
        for (std::size_t i = 0; i + 1 < all.size(); ++i) {
            CHECK(all[i].parts() > all[i + 1].parts());
        }
    }
    CHECK_THROWS_AS(enumerate_partitions(61), CapExceeded);
}

TEST_CASE("conjugate is an involution and matches hand values") {
    CHECK(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));
    for (int n = 0; n <= 8; ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
            CHECK(conjugate(conjugate(lam)) == lam);
            // column heights of lambda are the parts of lambda'
            Partition t = conjugate(lam);
            for (int s = 1; s <= lam.first_part(); ++s) {
                CHECK(lam.col_height(s) == t.part(s));
            }
        }
    }
}

TEST_CASE("n_stat") {
    CHECK(n_stat(Partition()) == 0);
    CHECK(n_stat(Partition({4, 2, 1})) == 4);  // 0*4 + 1*2 + 2*1
    CHECK(n_stat(Partition({1, 1, 1})) == 3);
    // n(lambda) = sum_s binom(lambda'_s, 2)
    for (const auto& lam : enumerate_partitions(7)) {
        long via_cols = 0;
        for (int s = 1; s <= lam.first_part(); ++s) {
            long h = lam.col_height(s);
            via_cols += h * (h - 1) / 2;
        }
        CHECK(n_stat(lam) == via_cols);
    }
}

TEST_CASE("add/remove column boxes round-trip") {
    Partition lam({3, 1});
    CHECK(add_to_column(lam, 1) == Partition({3, 1, 1}));
    CHECK(add_to_column(lam, 2) == Partition({3, 2}));
    CHECK(add_to_column(lam, 4) == Partition({4, 1}));
    CHECK_THROWS_AS(add_to_column(lam, 3), std::invalid_argument);
    CHECK_THROWS_AS(add_to_column(lam, 5), std::invalid_argument);

    CHECK(remove_from_column(Partition({3, 1}), 1) == Partition({3}));
    CHECK(remove_from_column(Partition({3, 1}), 3) == Partition({2, 1}));
    CHECK_THROWS_AS(remove_from_column(Partition({3, 1}), 2), std::invalid_argument);

    for (int n = 0; n <= 6; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            auto add = addable_columns(p);
            CHECK(std::is_sorted(add.begin(), add.end()));
            CHECK(add.front() == 1);
            for (int s : add) {
                Partition bigger = add_to_column(p, s);
                CHECK(bigger.size() == p.size() + 1);
                CHECK(remove_from_column(bigger, s) == p);
            }
            // the removable columns are exactly the distinct part sizes
            auto rem = removable_columns(p);
            CHECK(std::is_sorted(rem.begin(), rem.end()));
            std::vector<int> distinct;
            for (int i = 1; i <= p.first_part(); ++i)
                if (p.multiplicity(i) > 0) distinct.push_back(i);
            CHECK(rem == distinct);
            for (int s : rem) {
                Partition smaller = remove_from_column(p, s);
                CHECK(smaller.size() == p.size() - 1);
                CHECK(add_to_column(smaller, s) == p);
            }
        }
    }
}

TEST_CASE("attach_row keeps parts sorted") {
    CHECK(attach_row(Partition({3, 1}), 2) == Partition({3, 2, 1}));
    CHECK(attach_row(Partition(), 4) == Partition({4}));
    CHECK(attach_row(Partition({2, 2}), 2) == Partition({2, 2, 2}));
    CHECK(attach_row(Partition({1, 1}), 5) == Partition({5, 1, 1}));
    CHECK_THROWS_AS(attach_row(Partition({1}), 0), std::invalid_argument);
}
