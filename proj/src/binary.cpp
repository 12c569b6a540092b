#include "sphsum/binary.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <set>
#include <sstream>

#include "sphsum/errors.hpp"

namespace sphsum {

namespace {

std::vector<std::uint64_t> pack(const std::string& row) {
    std::vector<std::uint64_t> blocks((row.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == '1')
            blocks[i / 64] |= std::uint64_t{1} << (i % 64);
        else if (row[i] != '0')
            throw ValidationError("codewords must consist of 0/1 characters");
    }
    return blocks;
}

}  // namespace

BinaryCode BinaryCode::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw ValidationError("empty code");
    BinaryCode code;
    code.length = static_cast<int>(rows.front().size());
    if (code.length == 0) throw ValidationError("codewords must be nonempty");
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != code.length)
            throw ValidationError("all codewords must have equal length");
        auto blocks = pack(row);
        if (!seen.insert(blocks).second) throw ValidationError("duplicate codeword: " + row);
        code.words.push_back(std::move(blocks));
    }
    return code;
}

BinaryCode BinaryCode::parse(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
        line.erase(0, start);
        if (line.empty()) continue;
        rows.push_back(line);
    }
    return from_strings(rows);
}

int BinaryCode::weight(std::size_t i) const {
    int w = 0;
    for (std::uint64_t b : words[i]) w += std::popcount(b);
    return w;
}

int BinaryCode::distance(std::size_t i, std::size_t j) const {
    int w = 0;
    for (std::size_t b = 0; b < words[i].size(); ++b)
        w += std::popcount(words[i][b] ^ words[j][b]);
    return w;
}

BinaryDistanceDistribution distance_distribution(const BinaryCode& code) {
    const std::size_t N = code.size();
    std::vector<long long> counts(static_cast<std::size_t>(code.length) + 1, 0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (i != j) ++counts[static_cast<std::size_t>(code.distance(i, j))];
    BinaryDistanceDistribution d;
    d.length = code.length;
    d.size = static_cast<long long>(N);
    d.counts.push_back({0, 1.0});
    for (int w = 1; w <= code.length; ++w)
        if (counts[static_cast<std::size_t>(w)] != 0)
            d.counts.push_back({w, static_cast<double>(counts[static_cast<std::size_t>(w)]) / N});
    d.validate();
    return d;
}

}  // namespace sphsum
