#pragma once

// Exact Kronecker coefficients g_{λ,μ,ν} by the class sum
// Σ_c χ_λ(c) χ_μ(c) χ_ν(c) / z_c, with the cheap structural short-circuits
// applied first: the length bound, then the closed forms for the one-row and
// one-column labels.

#include <string>
#include <vector>

#include "kronlab/arith.hpp"
#include "kronlab/character.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/partition.hpp"

namespace kronlab {

namespace detail {

inline bool is_single_row(const Partition& p) { return p.length() <= 1; }
inline bool is_single_column(const Partition& p) { return p.empty() || p[0] == 1; }

inline bool length_bound_vanishes(const Partition& a, const Partition& b, const Partition& c) {
    const auto la = static_cast<std::uint64_t>(a.length());
    const auto lb = static_cast<std::uint64_t>(b.length());
    const auto lc = static_cast<std::uint64_t>(c.length());
    return la > lb * lc || lb > la * lc || lc > la * lb;
}

}  // namespace detail

inline BigInt kron(const Partition& lambda, const Partition& mu, const Partition& nu,
                   CharacterTable& table = global_character_table()) {
    if (lambda.size() == 0 || lambda.size() != mu.size() || lambda.size() != nu.size())
        throw contract_error("kron: partitions must share a common positive size, got " +
                             to_text(lambda) + ", " + to_text(mu) + ", " + to_text(nu));

    if (detail::length_bound_vanishes(lambda, mu, nu)) return 0;

    // g_{(n),μ,ν} = δ_{μν} and g_{(1^n),μ,ν} = δ_{μ,ν'}, in any argument order.
    if (detail::is_single_row(lambda)) return mu == nu ? 1 : 0;
    if (detail::is_single_row(mu)) return lambda == nu ? 1 : 0;
    if (detail::is_single_row(nu)) return lambda == mu ? 1 : 0;
    if (detail::is_single_column(lambda)) return mu == conjugate(nu) ? 1 : 0;
    if (detail::is_single_column(mu)) return lambda == conjugate(nu) ? 1 : 0;
    if (detail::is_single_column(nu)) return lambda == conjugate(mu) ? 1 : 0;

    const auto n = static_cast<unsigned>(lambda.size());
    Rational sum{0};
    for (const Partition& c : enumerate_partitions(n, n)) {
        const CycleType ct = cycle_type(c);
        const BigInt term =
            character(lambda, ct, table) * character(mu, ct, table) * character(nu, ct, table);
        if (term != 0) sum += Rational{term} / Rational{ct.centralizer};
    }
    // The class sum counts a dimension: it must clear its denominator and be ≥ 0.
    if (denominator(sum) != 1 || sum < 0)
        throw std::logic_error("kron: class sum is not a nonnegative integer for " +
                               to_text(lambda) + ", " + to_text(mu) + ", " + to_text(nu));
    return numerator(sum);
}

// g_{λ,□,□} for the rectangle □ with d rows of length ℓ.
inline BigInt kron_rectangular(const Partition& lambda, unsigned ell, unsigned d,
                               CharacterTable& table = global_character_table()) {
    if (lambda.size() != static_cast<std::uint64_t>(ell) * d)
        throw contract_error("kron_rectangular: |λ| = " + std::to_string(lambda.size()) +
                             " does not equal ℓ·d = " + std::to_string(ell * d));
    if (lambda.length() > static_cast<std::size_t>(d) * d)
        throw contract_error("kron_rectangular: λ has more than d² rows");
    const Partition box = rectangle(ell, d);
    return kron(lambda, box, box, table);
}

// Restriction of the GL_{d1·d2} module λ to GL_{d1} × GL_{d2}: checks that the
// Kronecker-weighted dimension sum reproduces dim_weyl(λ, d1·d2) exactly.
struct SplitCheck {
    bool holds = false;
    BigInt lhs;  // dim_weyl(λ, d1·d2)
    BigInt rhs;  // Σ_{μ,ν} g_{λ,μ,ν} dim_weyl(μ,d1) dim_weyl(ν,d2)
};

inline SplitCheck verify_split_identity(const Partition& lambda, unsigned d1, unsigned d2,
                                        CharacterTable& table = global_character_table()) {
    if (d1 == 0 || d2 == 0) throw contract_error("verify_split_identity: factors must be positive");
    if (lambda.length() > static_cast<std::size_t>(d1) * d2)
        throw contract_error("verify_split_identity: λ has more than d1·d2 rows");
    SplitCheck check;
    check.lhs = dim_weyl(lambda, d1 * d2);
    const auto n = static_cast<unsigned>(lambda.size());
    for (const Partition& mu : enumerate_partitions(n, d1)) {
        const BigInt wm = dim_weyl(mu, d1);
        for (const Partition& nu : enumerate_partitions(n, d2)) {
            const BigInt g = kron(lambda, mu, nu, table);
            if (g != 0) check.rhs += g * wm * dim_weyl(nu, d2);
        }
    }
    check.holds = check.lhs == check.rhs;
    return check;
}

}  // namespace kronlab
