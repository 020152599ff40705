#include <catch2/catch_amalgamated.hpp>

#include "kronlab/partition.hpp"

#include "oracles.hpp"

using kronlab::BigInt;
using kronlab::contract_error;
using kronlab::Partition;
using kronlab::Rational;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("construction canonicalizes and validates") {
    CHECK(P({3, 2, 0, 0}) == P({3, 2}));
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{}.length() == 0);
    CHECK(P({4, 2, 1}).size() == 7);
    CHECK(P({4, 2, 1}).length() == 3);
    CHECK_THROWS_AS(P({1, 2}), contract_error);
}

TEST_CASE("enumerate: order, bounds, edge cases") {
    CHECK(kronlab::enumerate_partitions(0, 5) == std::vector<Partition>{Partition{}});
    CHECK(kronlab::enumerate_partitions(4, 4) ==
          std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
    CHECK(kronlab::enumerate_partitions(2, 1) == std::vector<Partition>{P({2})});
    CHECK(kronlab::enumerate_partitions(3, 0).empty());
}

TEST_CASE("enumeration count matches the counting recurrence") {
    for (unsigned n = 0; n <= 40; ++n) {
        const auto all = kronlab::enumerate_partitions(n, n);
        CHECK(BigInt(all.size()) == oracles::partition_count(n, n));
        CHECK(kronlab::count_partitions(n, n) == oracles::partition_count(n, n));
    }
    // length-capped counts as well
    for (unsigned n = 0; n <= 18; ++n)
        for (unsigned cap = 0; cap <= 5; ++cap) {
            CHECK(BigInt(kronlab::enumerate_partitions(n, cap).size()) ==
                  oracles::partition_count(n, cap));
            CHECK(kronlab::count_partitions(n, cap) == oracles::partition_count(n, cap));
        }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(P({3})) == P({1, 1, 1}));
    CHECK(conjugate(P({2, 1})) == P({2, 1}));
    for (unsigned n = 0; n <= 8; ++n)
        for (const Partition& p : kronlab::enumerate_partitions(n, n))
            CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("stretch") {
    CHECK(stretch(P({2, 1}), 2) == P({4, 2}));
    for (unsigned ell = 1; ell <= 4; ++ell)
        for (unsigned d = 1; d <= 4; ++d)
            for (unsigned k = 1; k <= 3; ++k)
                CHECK(stretch(kronlab::rectangle(ell, d), k) == kronlab::rectangle(k * ell, d));
    const Partition p = P({5, 3, 3, 1});
    CHECK(stretch(p, 1) == p);
    CHECK(stretch(p, 3).size() == 3 * p.size());
    CHECK(stretch(p, 3).length() == p.length());
    CHECK_THROWS_AS(stretch(p, 0), contract_error);
}

TEST_CASE("rectangle") {
    CHECK(kronlab::rectangle(1, 2) == P({1, 1}));
    CHECK(kronlab::rectangle(3, 1) == P({3}));
    for (unsigned ell = 1; ell <= 6; ++ell)
        for (unsigned d = 1; d <= 6; ++d) {
            CHECK(kronlab::rectangle(ell, d).size() == static_cast<std::uint64_t>(ell) * d);
            CHECK(kronlab::rectangle(ell, d).length() == d);
        }
}

TEST_CASE("dim_specht: examples and identities") {
    for (unsigned n = 1; n <= 8; ++n) CHECK(kronlab::dim_specht(P({n})) == 1);
    CHECK(kronlab::dim_specht(P({2, 1})) == 2);
    CHECK(kronlab::dim_specht(P({2, 2})) == 2);
    for (unsigned n = 1; n <= 10; ++n) {
        BigInt burnside{0};
        for (const Partition& p : kronlab::enumerate_partitions(n, n)) {
            const BigInt f = kronlab::dim_specht(p);
            CHECK(f == kronlab::dim_specht(conjugate(p)));
            burnside += f * f;
        }
        CHECK(burnside == kronlab::factorial(n));
    }
}

TEST_CASE("dim_weyl: examples and tensor-power dimension identity") {
    CHECK(kronlab::dim_weyl(P({2}), 2) == 3);
    CHECK(kronlab::dim_weyl(P({1, 1}), 2) == 1);
    CHECK(kronlab::dim_weyl(P({1, 1, 1}), 2) == 0);
    for (unsigned d = 1; d <= 4; ++d)
        for (unsigned k = 1; k <= 8; ++k) {
            BigInt sum{0};
            for (const Partition& p : kronlab::enumerate_partitions(k, d))
                sum += kronlab::dim_specht(p) * kronlab::dim_weyl(p, d);
            CHECK(sum == kronlab::int_pow(BigInt{d}, k));
        }
}

TEST_CASE("normalize") {
    const auto norm = kronlab::normalize(P({2, 1}));
    CHECK(norm.entries == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
    for (unsigned d = 1; d <= 5; ++d) {
        const auto uniform = kronlab::normalize(kronlab::rectangle(3, d));
        for (const auto& e : uniform.entries) CHECK(e == Rational(1, d));
    }
    for (unsigned n = 1; n <= 6; ++n)
        for (const Partition& p : kronlab::enumerate_partitions(n, n))
            for (unsigned k = 1; k <= 5; ++k)
                CHECK(kronlab::normalize(stretch(p, k)).entries == kronlab::normalize(p).entries);
    CHECK_THROWS_AS(kronlab::normalize(Partition{}), contract_error);
}

TEST_CASE("text form") {
    CHECK(kronlab::to_text(P({4, 2, 1})) == "[4,2,1]");
    CHECK(kronlab::to_text(Partition{}) == "[]");
    CHECK(kronlab::partition_from_text("[4,2,1]") == P({4, 2, 1}));
    CHECK(kronlab::partition_from_text("[]") == Partition{});
    CHECK(kronlab::partition_from_text(" [ 3 , 1 ] ") == P({3, 1}));
    for (unsigned n = 0; n <= 9; ++n)
        for (const Partition& p : kronlab::enumerate_partitions(n, n))
            CHECK(kronlab::partition_from_text(kronlab::to_text(p)) == p);
    for (const char* bad : {"3,2", "[2,3]", "[a]", "[1,]", "[1", "1]", "[-1]", "[0]", "[]x", ""})
        CHECK_THROWS_AS(kronlab::partition_from_text(bad), contract_error);
}

TEST_CASE("rational parsing") {
    CHECK(kronlab::parse_rational("3/4") == Rational(3, 4));
    CHECK(kronlab::parse_rational("0.4") == Rational(2, 5));
    CHECK(kronlab::parse_rational("12") == Rational(12));
    CHECK(kronlab::parse_rational("-1/2") == Rational(-1, 2));
    CHECK(kronlab::parse_rational("2.50") == Rational(5, 2));
    CHECK(kronlab::rational_to_text(Rational(3, 4)) == "3/4");
    CHECK(kronlab::rational_to_text(Rational(7)) == "7");
    for (const char* bad : {"", "x", "1/0", "1e-3", "1.2.3", "/2", "1/", "."})
        CHECK_THROWS_AS(kronlab::parse_rational(bad), contract_error);
}
