#pragma once

// Integer partitions with the arithmetic the rest of the library is built on:
// enumeration, conjugation, stretching, hook-length and hook-content dimension
// formulas, and the canonical bracket text form "[4,2,1]" shared by the CLI
// and the cache files.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kronlab/arith.hpp"
#include "kronlab/errors.hpp"

namespace kronlab {

class Partition {
public:
    Partition() = default;  // the unique partition of 0

    // Validates weak decrease; zero parts are stripped so equality is canonical.
    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i])
                throw contract_error("partition parts must be weakly decreasing");
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        size_ = std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    std::uint64_t size() const { return size_; }          // |λ|
    std::size_t length() const { return parts_.size(); }  // number of nonzero parts
    bool empty() const { return parts_.empty(); }
    unsigned operator[](std::size_t i) const { return parts_[i]; }
    unsigned part_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<unsigned> parts_;
    std::uint64_t size_ = 0;
};

// Exact probability vector λ/|λ|.
struct NormalizedPartition {
    std::vector<Rational> entries;
};

inline Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<unsigned> t(p[0], 0);
    for (unsigned j = 0; j < p[0]; ++j)
        t[j] = static_cast<unsigned>(std::count_if(p.parts().begin(), p.parts().end(),
                                                   [j](unsigned part) { return part > j; }));
    return Partition(std::move(t));
}

inline Partition stretch(const Partition& p, unsigned k) {
    if (k == 0) throw contract_error("stretching factor must be positive");
    std::vector<unsigned> parts = p.parts();
    for (auto& part : parts) part *= k;
    return Partition(std::move(parts));
}

inline Partition rectangle(unsigned ell, unsigned d) {
    if (ell == 0 || d == 0) throw contract_error("rectangle requires positive side lengths");
    return Partition(std::vector<unsigned>(d, ell));
}

// All partitions of n with at most max_length parts, in reverse-lexicographic
// order (largest first part first), each exactly once.
inline std::vector<Partition> enumerate_partitions(unsigned n, unsigned max_length) {
    std::vector<Partition> out;
    std::vector<unsigned> current;
    const std::function<void(unsigned, unsigned, unsigned)> rec =
        [&](unsigned remaining, unsigned max_part, unsigned slots) {
            if (remaining == 0) {
                out.emplace_back(current);
                return;
            }
            if (slots == 0) return;
            // a partition into at most `slots` parts each ≤ first needs first·slots ≥ remaining
            for (unsigned first = std::min(remaining, max_part); first >= 1; --first) {
                if (static_cast<std::uint64_t>(first) * slots < remaining) break;
                current.push_back(first);
                rec(remaining - first, first, slots - 1);
                current.pop_back();
            }
        };
    rec(n, n, max_length);
    return out;
}

// Partition-counting recurrence (parts bounded by max_length after conjugation);
// cheap enough for the budget checks even when enumeration would not be.
inline BigInt count_partitions(std::uint64_t n, unsigned max_length) {
    if (n == 0) return 1;
    if (max_length == 0) return 0;
    std::vector<BigInt> dp(n + 1);
    dp[0] = 1;
    const std::uint64_t cap = std::min<std::uint64_t>(max_length, n);
    for (std::uint64_t s = 1; s <= cap; ++s)
        for (std::uint64_t m = s; m <= n; ++m) dp[m] += dp[m - s];
    return dp[n];
}

namespace detail {

inline std::vector<unsigned> hook_lengths(const Partition& p) {
    const Partition conj = conjugate(p);
    std::vector<unsigned> hooks;
    hooks.reserve(p.size());
    for (std::size_t i = 0; i < p.length(); ++i)
        for (unsigned j = 0; j < p[i]; ++j)
            hooks.push_back(p[i] - j + conj[j] - static_cast<unsigned>(i) - 1);
    return hooks;
}

}  // namespace detail

// Dimension of the irreducible symmetric-group module labelled by λ
// (hook-length formula).
inline BigInt dim_specht(const Partition& p) {
    BigInt denom{1};
    for (unsigned h : detail::hook_lengths(p)) denom *= h;
    BigInt num = factorial(static_cast<unsigned>(p.size()));
    BigInt q = num / denom;
    return q;
}

// Dimension of the irreducible GL_d module with highest weight λ
// (hook-content formula); zero when λ has more than d rows.
inline BigInt dim_weyl(const Partition& p, unsigned d) {
    if (p.length() > d) return 0;
    BigInt num{1};
    for (std::size_t i = 0; i < p.length(); ++i)
        for (unsigned j = 0; j < p[i]; ++j)
            num *= BigInt(static_cast<std::int64_t>(d) + static_cast<std::int64_t>(j) -
                          static_cast<std::int64_t>(i));
    BigInt denom{1};
    for (unsigned h : detail::hook_lengths(p)) denom *= h;
    return num / denom;
}

inline NormalizedPartition normalize(const Partition& p) {
    if (p.size() == 0) throw contract_error("cannot normalize the empty partition");
    NormalizedPartition out;
    out.entries.reserve(p.length());
    const BigInt n{p.size()};
    for (unsigned part : p.parts()) out.entries.emplace_back(BigInt{part}, n);
    return out;
}

// λ/|λ| as a rational vector padded with zeros to pad_to entries.
inline std::vector<Rational> normalized_entries(const Partition& p, std::size_t pad_to) {
    std::vector<Rational> v = normalize(p).entries;
    if (v.size() < pad_to) v.resize(pad_to, Rational{0});
    return v;
}

inline std::string to_text(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    s += ']';
    return s;
}

// Strict bracket form: "[4,2,1]" or "[]"; spaces around tokens are tolerated,
// anything else is a contract error naming the offending text.
inline Partition partition_from_text(std::string_view text) {
    const auto bad = [&] {
        throw contract_error("not a partition: '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') bad();
    ++i;
    std::vector<unsigned> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start || i - start > 9) bad();
            unsigned long v = std::stoul(std::string(text.substr(start, i - start)));
            if (v == 0) bad();  // text form carries nonzero parts only
            parts.push_back(static_cast<unsigned>(v));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            bad();
        }
    }
    skip_ws();
    if (i != text.size()) bad();
    try {
        return Partition(std::move(parts));
    } catch (const contract_error&) {
        bad();
    }
    return {};  // unreachable
}

}  // namespace kronlab

template <>
struct std::hash<kronlab::Partition> {
    std::size_t operator()(const kronlab::Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (unsigned part : p.parts()) {
            h ^= part;
            h *= 1099511628211ull;
        }
        return h;
    }
};
