#pragma once

// Exact irreducible characters of symmetric groups via the Murnaghan-Nakayama
// rule. Values are memoized in a process-wide sharded table keyed by the pair
// (shape, remaining cycle multiset); every entry is itself a true character
// value, which is what makes the table persistable as (λ, μ, value) records.

#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kronlab/arith.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/partition.hpp"

namespace kronlab {

// A conjugacy class of S_n: the cycle lengths and the centralizer order
// z = Π i^{m_i} m_i!; the class has n!/z elements.
struct CycleType {
    Partition cycles;
    BigInt centralizer;
};

inline BigInt centralizer_order(const Partition& mu) {
    BigInt z{1};
    std::size_t i = 0;
    while (i < mu.length()) {
        std::size_t j = i;
        while (j < mu.length() && mu[j] == mu[i]) ++j;
        const auto mult = static_cast<unsigned>(j - i);
        z *= int_pow(BigInt{mu[i]}, mult) * factorial(mult);
        i = j;
    }
    return z;
}

inline CycleType cycle_type(Partition mu) {
    BigInt z = centralizer_order(mu);
    return CycleType{std::move(mu), std::move(z)};
}

// Memoized character values. Lookups take a shared lock per shard, inserts an
// exclusive one; the table may be preloaded from a cache file and can report
// which entries were computed (rather than loaded) since then.
class CharacterTable {
public:
    struct Record {
        Partition shape;
        Partition cycles;
        BigInt value;
    };

    std::optional<BigInt> find(const std::u16string& key) const {
        const Shard& shard = shard_for(key);
        std::shared_lock lock(shard.mutex);
        if (auto it = shard.values.find(key); it != shard.values.end()) return it->second.value;
        return std::nullopt;
    }

    void insert(const std::u16string& key, BigInt value, bool persisted) {
        Shard& shard = shard_for(key);
        std::unique_lock lock(shard.mutex);
        shard.values.try_emplace(key, Entry{std::move(value), persisted});
    }

    void note_computation() { computed_.fetch_add(1, std::memory_order_relaxed); }

    std::uint64_t computations() const { return computed_.load(std::memory_order_relaxed); }

    std::size_t size() const {
        std::size_t total = 0;
        for (const Shard& shard : shards_) {
            std::shared_lock lock(shard.mutex);
            total += shard.values.size();
        }
        return total;
    }

    // Entries not yet marked as persisted, decoded back to (shape, cycles, value);
    // marks them persisted. Used by the append-only cache writer.
    std::vector<Record> take_unpersisted() {
        std::vector<Record> out;
        for (Shard& shard : shards_) {
            std::unique_lock lock(shard.mutex);
            for (auto& [key, entry] : shard.values) {
                if (entry.persisted) continue;
                entry.persisted = true;
                auto [shape, cycles] = decode_key(key);
                out.push_back(Record{std::move(shape), std::move(cycles), entry.value});
            }
        }
        return out;
    }

    static std::u16string encode_key(const Partition& shape, std::span<const unsigned> cycles) {
        std::u16string key;
        key.reserve(shape.length() + cycles.size() + 1);
        const auto push = [&key](unsigned v) {
            if (v >= 0xffff) throw contract_error("character table keys support parts up to 65534");
            key.push_back(static_cast<char16_t>(v));
        };
        for (unsigned part : shape.parts()) push(part);
        key.push_back(char16_t{0xffff});
        for (unsigned c : cycles) push(c);
        return key;
    }

    static std::pair<Partition, Partition> decode_key(const std::u16string& key) {
        std::vector<unsigned> shape, cycles;
        bool seen_sep = false;
        for (char16_t c : key) {
            if (c == char16_t{0xffff}) {
                seen_sep = true;
                continue;
            }
            (seen_sep ? cycles : shape).push_back(static_cast<unsigned>(c));
        }
        return {Partition(std::move(shape)), Partition(std::move(cycles))};
    }

private:
    struct Entry {
        BigInt value;
        bool persisted = false;
    };
    struct Shard {
        mutable std::shared_mutex mutex;
        std::unordered_map<std::u16string, Entry> values;
    };

    Shard& shard_for(const std::u16string& key) {
        return shards_[std::hash<std::u16string>{}(key) % kShardCount];
    }
    const Shard& shard_for(const std::u16string& key) const {
        return shards_[std::hash<std::u16string>{}(key) % kShardCount];
    }

    static constexpr std::size_t kShardCount = 64;
    std::array<Shard, kShardCount> shards_;
    std::atomic<std::uint64_t> computed_{0};
};

inline CharacterTable& global_character_table() {
    static CharacterTable table;
    return table;
}

namespace detail {

// First-column hook lengths β_i = λ_i + (L-1-i), strictly decreasing.
inline std::vector<unsigned> beta_numbers(const Partition& shape) {
    const std::size_t len = shape.length();
    std::vector<unsigned> beta(len);
    for (std::size_t i = 0; i < len; ++i)
        beta[i] = shape[i] + static_cast<unsigned>(len - 1 - i);
    return beta;
}

inline Partition partition_from_beta(std::vector<unsigned> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const std::size_t len = beta.size();
    std::vector<unsigned> parts(len);
    for (std::size_t i = 0; i < len; ++i)
        parts[i] = beta[i] - static_cast<unsigned>(len - 1 - i);
    return Partition(std::move(parts));
}

inline BigInt mn_recurse(const Partition& shape, std::span<const unsigned> cycles,
                         CharacterTable& table) {
    if (cycles.empty()) return 1;  // shape is empty here: sizes stay matched
    const std::u16string key = CharacterTable::encode_key(shape, cycles);
    if (auto hit = table.find(key)) return *hit;

    table.note_computation();
    const unsigned strip = cycles.front();
    const auto rest = cycles.subspan(1);
    const std::vector<unsigned> beta = beta_numbers(shape);
    BigInt total{0};
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] < strip) break;  // beta is decreasing
        const unsigned target = beta[i] - strip;
        // removable strip iff target is not already a beta number
        std::size_t height = 0;
        bool collision = false;
        for (std::size_t j = i + 1; j < beta.size(); ++j) {
            if (beta[j] > target) {
                ++height;
            } else {
                collision = beta[j] == target;
                break;
            }
        }
        if (collision) continue;
        std::vector<unsigned> next = beta;
        next[i] = target;
        const BigInt sub = mn_recurse(partition_from_beta(std::move(next)), rest, table);
        if (height % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    table.insert(key, total, false);
    return total;
}

}  // namespace detail

// χ_λ evaluated on the conjugacy class μ; |λ| must equal |μ|.
inline BigInt character(const Partition& lambda, const CycleType& mu,
                        CharacterTable& table = global_character_table()) {
    if (lambda.size() != mu.cycles.size())
        throw contract_error("character: |shape| = " + std::to_string(lambda.size()) +
                             " but cycle type has size " + std::to_string(mu.cycles.size()));
    return detail::mn_recurse(lambda, mu.cycles.parts(), table);
}

inline BigInt character(const Partition& lambda, const Partition& mu,
                        CharacterTable& table = global_character_table()) {
    return character(lambda, cycle_type(mu), table);
}

// χ_λ on every class of S_{|λ|}, in enumeration order of the cycle types.
inline std::vector<std::pair<CycleType, BigInt>> character_row(
    const Partition& lambda, CharacterTable& table = global_character_table()) {
    const auto n = static_cast<unsigned>(lambda.size());
    std::vector<std::pair<CycleType, BigInt>> row;
    for (Partition& mu : enumerate_partitions(n, n)) {
        CycleType ct = cycle_type(std::move(mu));
        BigInt value = character(lambda, ct, table);
        row.emplace_back(std::move(ct), std::move(value));
    }
    return row;
}

}  // namespace kronlab
