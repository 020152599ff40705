#pragma once

// Exact projector weights for the isotypic decomposition of tensor powers:
// the weight of λ at spectrum r is dim[λ] · s_λ(r), evaluated through the
// power-sum expansion of the Schur polynomial so the memoized character
// engine does all the work. Everything here is exact rational arithmetic;
// no tensor-power operator is ever materialized.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "kronlab/arith.hpp"
#include "kronlab/character.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/exp_bounds.hpp"
#include "kronlab/kronecker.hpp"
#include "kronlab/partition.hpp"

namespace kronlab {

namespace detail {

inline void validate_rational_spectrum(const std::vector<Rational>& r, const char* who) {
    if (r.empty()) throw contract_error(std::string(who) + ": empty spectrum");
    for (const Rational& x : r)
        if (x < 0) throw contract_error(std::string(who) + ": negative spectrum entry");
    if (!is_weakly_decreasing(r))
        throw contract_error(std::string(who) + ": spectrum must be decreasing");
    if (rational_sum(r) != 1)
        throw contract_error(std::string(who) + ": spectrum must sum to exactly 1");
}

}  // namespace detail

// Schur polynomial s_λ(x_1..x_d) via s_λ = Σ_μ χ_λ(μ) p_μ(x) / z_μ;
// zero when λ has more rows than there are variables.
inline Rational schur_eval(const Partition& lambda, const std::vector<Rational>& x,
                           CharacterTable& table = global_character_table()) {
    if (lambda.length() > x.size()) return 0;
    if (lambda.size() == 0) return 1;
    const auto n = static_cast<unsigned>(lambda.size());
    // power sums p_1..p_n of the variables
    std::vector<Rational> power(n + 1, Rational{0});
    std::vector<Rational> running(x.begin(), x.end());
    for (unsigned j = 1; j <= n; ++j) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (j > 1) running[i] *= x[i];
            power[j] += running[i];
        }
    }
    Rational sum{0};
    for (const Partition& mu : enumerate_partitions(n, n)) {
        const BigInt chi = character(lambda, mu, table);
        if (chi == 0) continue;
        Rational p{1};
        for (unsigned part : mu.parts()) p *= power[part];
        if (p != 0) sum += Rational{chi} * p / Rational{centralizer_order(mu)};
    }
    return sum;
}

// tr(P_λ ρ^⊗k) for a density operator with spectrum r: dim[λ] · s_λ(r).
struct ProjectorWeight {
    Partition lambda;
    std::vector<Rational> spectrum;
    Rational weight;
};

inline ProjectorWeight projector_weight(const Partition& lambda, const std::vector<Rational>& r,
                                        CharacterTable& table = global_character_table()) {
    detail::validate_rational_spectrum(r, "projector_weight");
    if (lambda.length() > r.size())
        throw contract_error("projector_weight: λ has more rows than the spectrum has entries");
    ProjectorWeight w{lambda, r, {}};
    w.weight = Rational{dim_specht(lambda)} * schur_eval(lambda, r, table);
    return w;
}

// Checks tr(P_λ ρ^⊗k) ≤ (k+1)^{d(d-1)/2} e^{-(k/2)·t²} with t = ‖λ/k - r‖₁.
// The right-hand side is reported as a certified rational upper bound.
struct BoundCheck {
    Partition lambda;
    std::vector<Rational> spectrum;
    std::uint64_t k = 0;
    std::size_t d = 0;
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

inline BoundCheck check_estimation_bound(const Partition& lambda, const std::vector<Rational>& r,
                                         CharacterTable& table = global_character_table()) {
    BoundCheck check{lambda, r, lambda.size(), r.size(), {}, {}, false};
    check.lhs = projector_weight(lambda, r, table).weight;
    const Rational t = l1_distance(normalized_entries(lambda, r.size()), r);
    const Rational x = Rational{check.k} * t * t / 2;
    const auto exponent = static_cast<unsigned>(check.d * (check.d - 1) / 2);
    const Rational poly = rational_pow(Rational{check.k + 1}, exponent);
    // rhs = poly / e^x, rounded up via a lower bound on e^x
    check.rhs = poly / exp_interval(x, 40).lo;
    check.holds = check.lhs <= check.rhs;
    return check;
}

// Aggregate tail weights of the spectrum-estimation distribution for the
// uniform-marginal construction at tensor power K = k·|λ|: the mass outside
// the ε-balls around u_d (both marginals) and around λ̄ (the joint spectrum).
// When all three tails are < 1/3 a triple (Λ, μ, ν) with nonvanishing
// Kronecker coefficient must exist inside the balls; the witness search
// exhibits one explicitly. Distances are exact; ties (distance = ε) count as
// inside the ball.
struct WitnessReport {
    Partition lambda;
    unsigned d = 0;
    Rational eps;
    unsigned k = 0;
    std::uint64_t tensor_power = 0;  // K = k·|λ|
    Rational tail_a;                 // Σ weights with ‖μ̄ - u_d‖₁ > ε, spectrum u_d
    Rational tail_b;
    Rational tail_joint;             // Σ weights with ‖Λ̄ - λ̄‖₁ > ε, spectrum λ̄
    bool tails_below_third = false;
    std::optional<std::array<Partition, 3>> witness;  // (Λ, μ, ν) if found
    BigInt witness_g;
};

inline WitnessReport witness_admissible_triple(const Partition& lambda, unsigned d,
                                               const Rational& eps, unsigned k,
                                               std::uint64_t budget = 200000,
                                               CharacterTable& table = global_character_table()) {
    if (d == 0 || k == 0) throw contract_error("witness_admissible_triple: d and k must be positive");
    if (eps <= 0 || eps > 2)
        throw contract_error("witness_admissible_triple: ε must lie in (0, 2]");
    if (lambda.size() == 0 || lambda.size() % d != 0)
        throw contract_error("witness_admissible_triple: |λ| must be a positive multiple of d");
    if (lambda.length() > static_cast<std::size_t>(d) * d)
        throw contract_error("witness_admissible_triple: λ has more than d² rows");

    WitnessReport report{lambda, d, eps, k, k * lambda.size(), {}, {}, {}, false, std::nullopt, 0};
    const auto big_k = static_cast<std::uint64_t>(report.tensor_power);
    if (big_k > 100'000'000)
        throw budget_error("witness_admissible_triple: tensor power " + std::to_string(big_k) +
                               " is out of range",
                           std::to_string(big_k));
    const BigInt count = count_partitions(big_k, d * d);
    if (count > budget)
        throw budget_error("witness_admissible_triple: " + count.str() +
                               " candidate partitions exceed the budget of " +
                               std::to_string(budget),
                           count.str());
    const auto kk = static_cast<unsigned>(big_k);

    const std::vector<Rational> uniform(d, Rational(1, d));
    const std::vector<Rational> joint_spec = normalized_entries(lambda, d * d);

    std::vector<Partition> ball_marginal, ball_joint;
    Rational tail_marginal{0}, tail_joint{0};
    for (const Partition& mu : enumerate_partitions(kk, d)) {
        const Rational dist = l1_distance(normalized_entries(mu, d), uniform);
        if (dist > eps)
            tail_marginal += projector_weight(mu, uniform, table).weight;
        else
            ball_marginal.push_back(mu);
    }
    for (const Partition& big : enumerate_partitions(kk, d * d)) {
        const Rational dist = l1_distance(normalized_entries(big, d * d), joint_spec);
        if (dist > eps)
            tail_joint += projector_weight(big, joint_spec, table).weight;
        else
            ball_joint.push_back(big);
    }
    report.tail_a = tail_marginal;
    report.tail_b = tail_marginal;  // both marginals are u_d
    report.tail_joint = tail_joint;
    const Rational third(1, 3);
    report.tails_below_third = tail_marginal < third && tail_joint < third;

    for (const Partition& big : ball_joint) {
        for (const Partition& mu : ball_marginal) {
            for (const Partition& nu : ball_marginal) {
                const BigInt g = kron(big, mu, nu, table);
                if (g != 0) {
                    report.witness = std::array<Partition, 3>{big, mu, nu};
                    report.witness_g = g;
                    return report;
                }
            }
        }
    }
    return report;
}

}  // namespace kronlab
