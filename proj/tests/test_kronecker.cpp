#include <catch2/catch_amalgamated.hpp>

#include "kronlab/kronecker.hpp"

#include <array>

using kronlab::BigInt;
using kronlab::contract_error;
using kronlab::Partition;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("small exact values") {
    CHECK(kronlab::kron(P({2}), P({1, 1}), P({1, 1})) == 1);
    CHECK(kronlab::kron(P({1, 1}), P({1, 1}), P({1, 1})) == 0);
    CHECK(kronlab::kron(P({2, 2}), P({2, 2}), P({2, 2})) == 1);
    CHECK(kronlab::kron(P({3, 1}), P({3, 1}), P({3, 1})) == 1);
}

TEST_CASE("length bound short-circuit") {
    // five rows against 2·2 = 4
    CHECK(kronlab::kron(P({2, 1, 1, 1, 1}), P({3, 3}), P({3, 3})) == 0);
    CHECK(kronlab::kron(P({3, 3}), P({2, 1, 1, 1, 1}), P({3, 3})) == 0);
    // the same value through the raw class sum, bypassing the short-circuit
    kronlab::Rational sum{0};
    for (const Partition& c : kronlab::enumerate_partitions(6, 6)) {
        const auto ct = kronlab::cycle_type(c);
        sum += kronlab::Rational{kronlab::character(P({2, 1, 1, 1, 1}), ct) *
                                 kronlab::character(P({3, 3}), ct) *
                                 kronlab::character(P({3, 3}), ct)} /
               kronlab::Rational{ct.centralizer};
    }
    CHECK(sum == 0);
}

TEST_CASE("delta identities for one-row and one-column labels") {
    for (unsigned n = 1; n <= 7; ++n) {
        const Partition row({n});
        const Partition column(std::vector<unsigned>(n, 1));
        for (const Partition& mu : kronlab::enumerate_partitions(n, n))
            for (const Partition& nu : kronlab::enumerate_partitions(n, n)) {
                CHECK(kronlab::kron(row, mu, nu) == (mu == nu ? 1 : 0));
                CHECK(kronlab::kron(column, mu, nu) == (mu == kronlab::conjugate(nu) ? 1 : 0));
            }
    }
}

TEST_CASE("permutation and transpose symmetry") {
    for (unsigned n = 1; n <= 5; ++n) {
        const auto all = kronlab::enumerate_partitions(n, n);
        for (const Partition& a : all)
            for (const Partition& b : all)
                for (const Partition& c : all) {
                    const BigInt g = kronlab::kron(a, b, c);
                    CHECK(g == kronlab::kron(a, c, b));
                    CHECK(g == kronlab::kron(b, a, c));
                    CHECK(g == kronlab::kron(b, c, a));
                    CHECK(g == kronlab::kron(c, a, b));
                    CHECK(g == kronlab::kron(c, b, a));
                    CHECK(g == kronlab::kron(a, kronlab::conjugate(b), kronlab::conjugate(c)));
                }
    }
}

TEST_CASE("sum rule against tensor product dimensions") {
    for (unsigned n = 1; n <= 6; ++n) {
        const auto all = kronlab::enumerate_partitions(n, n);
        for (const Partition& mu : all)
            for (const Partition& nu : all) {
                BigInt sum{0};
                for (const Partition& lambda : all)
                    sum += kronlab::kron(lambda, mu, nu) * kronlab::dim_specht(lambda);
                CHECK(sum == kronlab::dim_specht(mu) * kronlab::dim_specht(nu));
            }
    }
}

TEST_CASE("rectangular wrapper") {
    CHECK(kronlab::kron_rectangular(P({2}), 1, 2) == 1);
    CHECK(kronlab::kron_rectangular(P({1, 1}), 1, 2) == 0);
    for (unsigned ell = 1; ell <= 4; ++ell)
        for (unsigned d = 1; d <= 2; ++d)
            CHECK(kronlab::kron_rectangular(P({ell * d}), ell, d) == 1);
    CHECK_THROWS_AS(kronlab::kron_rectangular(P({3}), 1, 2), contract_error);
    CHECK_THROWS_AS(kronlab::kron_rectangular(P({1, 1, 1, 1, 1}), 5, 1), contract_error);
}

TEST_CASE("restriction split identity") {
    const auto check22 = kronlab::verify_split_identity(P({2}), 2, 2);
    CHECK(check22.holds);
    CHECK(check22.lhs == 10);
    CHECK(check22.rhs == 10);

    for (unsigned d1 = 1; d1 <= 3; ++d1)
        for (unsigned d2 = 1; d2 <= 3; ++d2)
            CHECK(kronlab::verify_split_identity(P({1}), d1, d2).holds);

    for (unsigned n = 1; n <= 6; ++n) {
        for (const Partition& lambda : kronlab::enumerate_partitions(n, 4))
            CHECK(kronlab::verify_split_identity(lambda, 2, 2).holds);
        for (const Partition& lambda : kronlab::enumerate_partitions(n, 6))
            CHECK(kronlab::verify_split_identity(lambda, 2, 3).holds);
    }
}

TEST_CASE("contract violations") {
    CHECK_THROWS_AS(kronlab::kron(P({2}), P({2}), P({3})), contract_error);
    CHECK_THROWS_AS(kronlab::kron(Partition{}, Partition{}, Partition{}), contract_error);
}
