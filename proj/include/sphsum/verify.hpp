#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sphsum {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED5EEDULL;

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

enum class VerifyLevel { Quick, Full };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::Quick;
    std::uint64_t seed = kDefaultSeed;
    int shards = 1;
    // Fault-injection hook: corrupt the lambda table used by the
    // binary-identity check, which must then fail.
    bool corrupt_lambda_table = false;
};

// Cross-checks every formula path against its independent oracle:
// quadrature exactness, closed-form/pipeline agreement, attainment by the
// simplex and biorthogonal codes, reference-table reproduction, Monte Carlo
// discrepancy, the exact binary identity, and frame potentials. Quick runs
// in seconds; Full enlarges sample counts and sweeps.
std::vector<VerifyCheck> run_verify(const VerifyOptions& opts);

// Reference values for the two published bound tables (quadratic-size
// equiangular family rows r = 3..7; two-weight linear code rows r = 1..5).
struct ReferenceRow {
    int r;
    long long n;
    long long N;
    double upper;  // degree-3 upper bound
    double exact;  // sum of distances of the construction
    double lower;  // degree-3 lower bound at the family separation
};

const std::vector<ReferenceRow>& decaen_reference();
const std::vector<ReferenceRow>& sidelnikov_reference();

}  // namespace sphsum
