#pragma once

// Finite searches over the rectangular Kronecker family: the vanishing
// scanner, the minimal-stretching-factor finder, rational moment-polytope
// membership by denominator clearing, and the tail-bound threshold
// calculator with certified rational comparisons against 1/3.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "kronlab/arith.hpp"
#include "kronlab/character.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/exp_bounds.hpp"
#include "kronlab/kronecker.hpp"
#include "kronlab/partition.hpp"

namespace kronlab {

inline constexpr std::uint64_t kDefaultScanBudget = 100000;
inline constexpr unsigned kDefaultStretchCap = 8;
inline constexpr unsigned kDefaultMembershipCap = 12;

struct ScanOptions {
    std::uint64_t budget = kDefaultScanBudget;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct ScanReport {
    unsigned d = 0;
    unsigned ell = 0;
    std::uint64_t total = 0;            // candidates λ ⊢ ℓd with at most d² rows
    std::vector<Partition> vanishing;   // g_{λ,□,□} = 0, in enumeration order
    double seconds = 0;
};

// All λ ⊢ ℓd with at most d² rows whose rectangular Kronecker coefficient
// vanishes. Parallel over candidates; output order is the enumeration order
// regardless of thread count.
inline ScanReport scan_vanishing(unsigned d, unsigned ell, ScanOptions options = {},
                                 CharacterTable& table = global_character_table()) {
    if (d == 0 || ell == 0) throw contract_error("scan_vanishing: d and ℓ must be positive");
    const std::uint64_t n = static_cast<std::uint64_t>(d) * ell;
    const BigInt count = count_partitions(n, d * d);
    if (count > options.budget)
        throw budget_error("scan_vanishing: " + count.str() +
                               " candidate partitions exceed the budget of " +
                               std::to_string(options.budget),
                           count.str());

    const auto start = std::chrono::steady_clock::now();
    ScanReport report;
    report.d = d;
    report.ell = ell;
    const std::vector<Partition> candidates = enumerate_partitions(static_cast<unsigned>(n), d * d);
    report.total = candidates.size();
    const Partition box = rectangle(ell, d);

    std::vector<char> vanishes(candidates.size(), 0);
    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(candidates.size())));
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < candidates.size(); i += threads)
                        vanishes[i] = kron(candidates[i], box, box, table) == 0;
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
    }
    if (failed) std::rethrow_exception(failure);

    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (vanishes[i]) report.vanishing.push_back(candidates[i]);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

struct StretchResult {
    Partition lambda;
    unsigned d = 0;
    unsigned ell = 0;
    unsigned cap = 0;
    std::optional<unsigned> k_min;  // empty: no k ≤ cap works
    BigInt g;                       // coefficient at k_min when found
};

// Smallest k ≤ cap with g_{kλ,k□,k□} ≠ 0. Every k is tried in turn: no
// monotonicity in k is assumed anywhere.
inline StretchResult find_stretch(const Partition& lambda, unsigned d,
                                  unsigned cap = kDefaultStretchCap,
                                  CharacterTable& table = global_character_table()) {
    if (d == 0 || cap == 0) throw contract_error("find_stretch: d and cap must be positive");
    if (lambda.size() == 0 || lambda.size() % d != 0)
        throw contract_error("find_stretch: |λ| = " + std::to_string(lambda.size()) +
                             " is not a positive multiple of d = " + std::to_string(d));
    if (lambda.length() > static_cast<std::size_t>(d) * d)
        throw contract_error("find_stretch: λ has more than d² rows");
    const auto ell = static_cast<unsigned>(lambda.size() / d);
    StretchResult result{lambda, d, ell, cap, std::nullopt, 0};
    for (unsigned k = 1; k <= cap; ++k) {
        BigInt g = kron_rectangular(stretch(lambda, k), k * ell, d, table);
        if (g != 0) {
            result.k_min = k;
            result.g = std::move(g);
            break;
        }
    }
    return result;
}

struct MembershipResult {
    unsigned cap = 0;
    std::optional<unsigned> k;  // scan index that succeeded
    Partition lambda, mu, nu;   // witnesses at k (scaled by k · common denominator)
    BigInt g;
};

// A rational spectra triple (joint of length d², marginals of length d) lies
// in the nonvanishing locus iff some integer rescaling does: scale by
// k · lcm(denominators) for k = 1..cap and test the resulting partitions.
inline MembershipResult rational_membership(const std::vector<Rational>& joint,
                                            const std::vector<Rational>& marginal_a,
                                            const std::vector<Rational>& marginal_b,
                                            unsigned cap = kDefaultMembershipCap,
                                            CharacterTable& table = global_character_table()) {
    const std::size_t d = marginal_a.size();
    if (d == 0 || marginal_b.size() != d || joint.size() != d * d)
        throw contract_error("rational_membership: lengths must be (d², d, d)");
    for (const auto* vec : {&joint, &marginal_a, &marginal_b}) {
        for (const Rational& x : *vec)
            if (x < 0) throw contract_error("rational_membership: negative entry");
        if (!is_weakly_decreasing(*vec))
            throw contract_error("rational_membership: vectors must be decreasing");
        if (rational_sum(*vec) != 1)
            throw contract_error("rational_membership: vectors must sum to exactly 1");
    }

    BigInt common{1};
    for (const auto* vec : {&joint, &marginal_a, &marginal_b})
        for (const Rational& x : *vec) common = lcm(common, denominator(x));

    const auto scaled_partition = [&](const std::vector<Rational>& vec, unsigned k) {
        std::vector<unsigned> parts;
        parts.reserve(vec.size());
        for (const Rational& x : vec) {
            const BigInt scaled = numerator(x) * (common / denominator(x)) * k;
            if (scaled > 1'000'000'000)
                throw budget_error("rational_membership: cleared denominators give parts of size " +
                                       scaled.str(),
                                   scaled.str());
            parts.push_back(static_cast<unsigned>(scaled));
        }
        return Partition(std::move(parts));
    };

    MembershipResult result;
    result.cap = cap;
    for (unsigned k = 1; k <= cap; ++k) {
        Partition lambda = scaled_partition(joint, k);
        Partition mu = scaled_partition(marginal_a, k);
        Partition nu = scaled_partition(marginal_b, k);
        BigInt g = kron(lambda, mu, nu, table);
        if (g != 0) {
            result.k = k;
            result.lambda = std::move(lambda);
            result.mu = std::move(mu);
            result.nu = std::move(nu);
            result.g = std::move(g);
            break;
        }
    }
    return result;
}

struct ThresholdReport {
    unsigned d = 0;
    Rational eps;
    unsigned k_star = 0;
    // certified upper bounds on the three tail expressions at k_star
    Rational bound_a;      // (k+1)^{d(d+1)/2} e^{-kε²/2}
    Rational bound_b;      // same expression for the second marginal
    Rational bound_joint;  // (k+1)^{d²(d²+1)/2} e^{-kε²/2}
};

namespace detail {

// Directed-rounding interval for e^{-kc}, kept as integers scaled by
// 10^digits so the per-step powering is one big-integer multiply.
struct DecayInterval {
    BigInt scale;
    BigInt step_lo, step_hi;  // e^{-c}, rounded out
    BigInt lo, hi;            // e^{-kc} for the current k

    static DecayInterval start(const Rational& c, unsigned digits) {
        DecayInterval w;
        w.scale = int_pow(BigInt{10}, digits);
        const RationalInterval e = exp_interval(c, digits + 20);
        // e^{-c} ∈ [1/hi, 1/lo]
        w.step_lo = (w.scale * denominator(e.hi)) / numerator(e.hi);
        w.step_hi = (w.scale * denominator(e.lo) + numerator(e.lo) - 1) / numerator(e.lo);
        w.lo = w.scale;
        w.hi = w.scale;
        return w;
    }

    void advance() {
        lo = lo * step_lo / scale;
        hi = (hi * step_hi + scale - 1) / scale;
    }
};

enum class BoundSide { below_third, at_or_above_third, undecided };

inline BoundSide compare_third(const BigInt& poly, const DecayInterval& w) {
    if (3 * poly * w.hi < w.scale) return BoundSide::below_third;
    if (3 * poly * w.lo >= w.scale) return BoundSide::at_or_above_third;
    return BoundSide::undecided;
}

}  // namespace detail

// Certified decision of (k+1)^exponent · e^{-k·ε²/2} < 1/3 by a direct series
// evaluation at k; independent of the incremental scan below.
inline bool tail_bound_below_third(unsigned d, const Rational& eps, unsigned k, bool joint) {
    if (d == 0) throw contract_error("tail_bound_below_third: d must be positive");
    if (eps <= 0 || eps > 2) throw contract_error("tail_bound_below_third: ε must lie in (0, 2]");
    const std::uint64_t dd = joint ? static_cast<std::uint64_t>(d) * d : d;
    const auto exponent = static_cast<unsigned>(dd * (dd + 1) / 2);
    const Rational x = Rational{k} * eps * eps / 2;
    // (k+1)^A < (1/3) e^x ?
    return less_than_scaled_exp(rational_pow(Rational{k + 1}, exponent), Rational(1, 3), x);
}

// Minimal k for which all three tail bounds drop below 1/3, by increasing
// scan. Every comparison is certified; if the working precision cannot
// separate a bound from 1/3 the scan restarts with more digits.
inline ThresholdReport tail_bound_threshold(unsigned d, const Rational& eps) {
    if (d == 0) throw contract_error("tail_bound_threshold: d must be positive");
    if (eps <= 0 || eps > 2) throw contract_error("tail_bound_threshold: ε must lie in (0, 2]");
    const Rational c = eps * eps / 2;
    const auto exp_marginal = static_cast<unsigned>(static_cast<std::uint64_t>(d) * (d + 1) / 2);
    const std::uint64_t dd = static_cast<std::uint64_t>(d) * d;
    const auto exp_joint = static_cast<unsigned>(dd * (dd + 1) / 2);

    for (unsigned digits = 200;; digits *= 2) {
        auto w = detail::DecayInterval::start(c, digits);
        bool retry = false;
        for (unsigned k = 1; k <= 50'000'000 && !retry; ++k) {
            w.advance();
            if (w.lo == 0) {
                retry = true;
                break;
            }
            const BigInt poly_m = int_pow(BigInt{k + 1}, exp_marginal);
            const BigInt poly_j = int_pow(BigInt{k + 1}, exp_joint);
            const auto side_m = detail::compare_third(poly_m, w);
            const auto side_j = detail::compare_third(poly_j, w);
            if (side_m == detail::BoundSide::undecided || side_j == detail::BoundSide::undecided) {
                retry = true;
                break;
            }
            if (side_m == detail::BoundSide::below_third &&
                side_j == detail::BoundSide::below_third) {
                ThresholdReport report;
                report.d = d;
                report.eps = eps;
                report.k_star = k;
                report.bound_a = Rational(poly_m * w.hi, w.scale);
                report.bound_b = report.bound_a;
                report.bound_joint = Rational(poly_j * w.hi, w.scale);
                return report;
            }
        }
        if (!retry) throw std::logic_error("tail_bound_threshold: scan did not terminate");
    }
}

}  // namespace kronlab
