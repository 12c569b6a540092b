#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sphsum/families.hpp"

namespace sphsum {

// An explicit binary code: equal-length words packed into 64-bit blocks.
struct BinaryCode {
    int length = 0;
    std::vector<std::vector<std::uint64_t>> words;

    static BinaryCode from_strings(const std::vector<std::string>& rows);

    // File format: one codeword per line as a 0/1 string, '#' starts a
    // comment, blank lines ignored, all lines equal length, duplicates
    // rejected. Throws ValidationError on any violation.
    static BinaryCode parse(std::istream& in);

    std::size_t size() const { return words.size(); }
    int weight(std::size_t i) const;
    int distance(std::size_t i, std::size_t j) const;
};

BinaryDistanceDistribution distance_distribution(const BinaryCode& code);

}  // namespace sphsum
