#include <doctest.h>

#include <cmath>

#include "theta_asym/crank.hpp"

using namespace theta_asym;

TEST_CASE("crank statistic of single partitions") {
    CHECK(crank_of_partition({4}) == 4);          // no ones: largest part
    CHECK(crank_of_partition({2, 2}) == 2);       // no ones: largest part
    CHECK(crank_of_partition({1, 1, 1, 1}) == -4); // omega=4, mu=0
    CHECK(crank_of_partition({3, 1}) == 0);        // omega=1, mu=1
    CHECK(crank_of_partition({2, 1, 1}) == -2);    // omega=2, mu=0
}

TEST_CASE("partition numbers by pentagonal recurrence") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(5) == 7);
    CHECK(partition_count(20) == 627);
    CHECK(partition_count(40) == 37338);
    CHECK(partition_count(100) == 190569292L);
}

TEST_CASE("enumeration sums to p(n)") {
    CHECK(partition_count(0) == 1);
    for (int n = 1; n <= 24; ++n) {
        long total = 0;
        for (const auto& [m, cnt] : crank_oracle(n)) total += cnt;
        CHECK(total == partition_count(n));
    }
}

TEST_CASE("generating-function counts: the classical n = 1 sign pattern") {
    auto gf = crank_counts_gf(1);
    CHECK(gf.at(-1) == 1);
    CHECK(gf.at(0) == -1);
    CHECK(gf.at(1) == 1);
    // everywhere else the generating function agrees with enumeration
    for (int n : {2, 3, 5, 9, 14}) {
        CHECK(crank_counts_gf(n) == crank_oracle(n));
    }
}

TEST_CASE("counts are symmetric in m") {
    for (int n : {6, 11, 17}) {
        auto counts = crank_oracle(n);
        for (const auto& [m, cnt] : counts) {
            auto it = counts.find(-m);
            REQUIRE(it != counts.end());
            CHECK(it->second == cnt);
        }
    }
}

TEST_CASE("circle-method extraction reproduces counts exactly after rounding") {
    for (int n : {3, 8, 12}) {
        auto counts = crank_counts_gf(n);
        for (int m : {-3, 0, 2}) {
            auto rec = crank_extract(double(m), n);
            double got = rec.value.is_zero() ? 0.0 : rec.value.value().real();
            long want = counts.count(m) ? counts.at(m) : 0;
            CHECK(std::llround(got) == want);
            CHECK(std::abs(got - double(want)) < 1e-6 * std::max(1.0, std::abs(double(want))));
        }
    }
}
