#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace testsupport {

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

// splitmix64-based generator so expected values frozen in the tests do not
// depend on the standard library.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 1) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
    }
    long long integer(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Random distinct codewords as 0/1 strings.
inline std::vector<std::string> random_code(Rng& rng, int n, long long N) {
    std::vector<bool> used(static_cast<std::size_t>(1) << n, false);
    std::vector<std::string> rows;
    while (static_cast<long long>(rows.size()) < N) {
        const auto word = static_cast<std::uint64_t>(rng.integer(0, (1LL << n) - 1));
        if (used[word]) continue;
        used[word] = true;
        std::string row(static_cast<std::size_t>(n), '0');
        for (int b = 0; b < n; ++b)
            if ((word >> b) & 1u) row[static_cast<std::size_t>(b)] = '1';
        rows.push_back(std::move(row));
    }
    return rows;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

inline const char* cli_path() { return std::getenv("SPHSUM_CLI"); }

// Runs the CLI with stderr dropped; exit code from the shell.
inline CliResult run_cli(const std::string& args) {
    const char* cli = cli_path();
    if (cli == nullptr) throw std::runtime_error("SPHSUM_CLI not set");
    const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed");
    CliResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace testsupport
