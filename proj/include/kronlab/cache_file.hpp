#pragma once

// Line-oriented persistence for the character memo. Layout:
//
//   kronlab-cache v1
//   n <min> <max>            (fixed-width decimal fields, updated in place)
//   [3,1] [2,1,1] 1          (one character value per line)
//
// Records are only ever appended; the range line is the single fixed-size
// field rewritten in place. Corrupt lines are rejected with their line number.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "kronlab/arith.hpp"
#include "kronlab/character.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/partition.hpp"

namespace kronlab {

inline constexpr std::string_view kCacheHeader = "kronlab-cache v1";

namespace detail {

inline std::string fixed_width(std::uint64_t v) {
    std::string s = std::to_string(v);
    return std::string(10 - std::min<std::size_t>(10, s.size()), '0') + s;
}

inline std::string range_line(std::uint64_t lo, std::uint64_t hi) {
    return "n " + fixed_width(lo) + " " + fixed_width(hi);
}

}  // namespace detail

// Loads every record into the table (marked persisted). Returns the number of
// records read. Malformed content is a contract error naming the line.
inline std::size_t load_character_cache(const std::string& path, CharacterTable& table) {
    std::ifstream in(path);
    if (!in) throw contract_error("cannot open cache file: " + path);
    std::string line;
    std::size_t line_number = 0;
    const auto fail = [&](const std::string& why) {
        throw contract_error("cache file " + path + " line " + std::to_string(line_number) + ": " +
                             why);
    };
    if (!std::getline(in, line)) {
        ++line_number;
        fail("missing header");
    }
    ++line_number;
    if (line != kCacheHeader) fail("unsupported header '" + line + "'");
    if (!std::getline(in, line)) {
        ++line_number;
        fail("missing range line");
    }
    ++line_number;
    if (line.size() != 23 || line.rfind("n ", 0) != 0) fail("malformed range line");

    std::size_t records = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string shape_text, cycles_text, value_text;
        if (!(fields >> shape_text >> cycles_text >> value_text) || !(fields >> std::ws).eof())
            fail("expected 'shape cycles value'");
        try {
            const Partition shape = partition_from_text(shape_text);
            const Partition cycles = partition_from_text(cycles_text);
            if (shape.size() != cycles.size()) fail("sizes of shape and cycle type differ");
            bool negative = !value_text.empty() && value_text.front() == '-';
            std::string digits = negative ? value_text.substr(1) : value_text;
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                fail("bad integer '" + value_text + "'");
            BigInt value{digits};
            if (negative) value = -value;
            table.insert(CharacterTable::encode_key(shape, cycles.parts()), std::move(value), true);
            ++records;
        } catch (const contract_error& e) {
            fail(e.what());
        }
    }
    return records;
}

// Appends all not-yet-persisted table entries; creates the file (with header)
// when absent. Returns the number of records written.
inline std::size_t append_character_cache(const std::string& path, CharacterTable& table) {
    const auto records = table.take_unpersisted();

    std::uint64_t lo = ~std::uint64_t{0}, hi = 0;
    const bool exists = std::filesystem::exists(path);
    if (exists) {
        std::ifstream in(path);
        std::string header, range;
        if (!std::getline(in, header) || header != kCacheHeader)
            throw contract_error("cache file " + path + " line 1: unsupported header");
        if (!std::getline(in, range) || range.size() != 23)
            throw contract_error("cache file " + path + " line 2: malformed range line");
        lo = std::stoull(range.substr(2, 10));
        hi = std::stoull(range.substr(13, 10));
    }
    if (records.empty() && exists) return 0;

    for (const auto& record : records) {
        lo = std::min<std::uint64_t>(lo, record.shape.size());
        hi = std::max<std::uint64_t>(hi, record.shape.size());
    }
    if (lo > hi) lo = hi = 0;  // fresh empty cache

    if (!exists) {
        std::ofstream out(path);
        if (!out) throw contract_error("cannot create cache file: " + path);
        out << kCacheHeader << "\n" << detail::range_line(lo, hi) << "\n";
    }
    std::ofstream out(path, std::ios::in | std::ios::out);
    if (!out) throw contract_error("cannot write cache file: " + path);
    out.seekp(static_cast<std::streamoff>(std::string(kCacheHeader).size() + 1));
    out << detail::range_line(lo, hi);
    out.seekp(0, std::ios::end);
    for (const auto& record : records)
        out << to_text(record.shape) << ' ' << to_text(record.cycles) << ' ' << record.value.str()
            << "\n";
    return records.size();
}

}  // namespace kronlab
