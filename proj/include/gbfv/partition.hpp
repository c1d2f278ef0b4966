#ifndef GBFV_PARTITION_HPP
#define GBFV_PARTITION_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gbfv/cyclotomic.hpp"

namespace gbfv::part {

using cyclo::BigInt;
using cyclo::BigRat;
using cyclo::CycInt;
using cyclo::CycRat;

// The explicit conductor-21 constants every certificate is built from:
// beta generates a prime above 7, v is the unit with v*conj(v) = u =
// 7/(beta*conj(beta))^6, and the two Gauss-sum square roots.
struct Constants21 {
    CycInt beta;
    CycInt sqrt_m3;       // squares to -3
    CycInt sqrt_m7;       // squares to -7
    CycInt half_plus;     // (1 + sqrt(-7))/2, integral
    CycInt half_minus;    // (1 - sqrt(-7))/2
    CycInt v;
    CycRat u;             // v * conj(v), a real unit
    CycRat x1;            // conj(beta)^3 / beta^3 * (-zeta21)^5, |x1| = 1
};
const Constants21& constants_21();

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail;
};

// The five exact-arithmetic checks anchoring every certificate:
// norm(beta) = 7, u integral unit with (beta conj(beta))^6 u = 7,
// v conj(v) = u, v^2 = -u zeta21, and the two Gauss-sum squares.
std::vector<CheckResult> verify_foundation_21();

// Roots of unity in Q(zeta_N) are indexed throughout this module as powers
// of -zeta_N (a primitive 2N-th root); exposed for the gbf cross-checks.
CycInt root_of_unity(long N, long j);

// All (l, j) with 1 <= l <= l_max, 0 <= j < j_count and
// 2 | beta^l + conj(beta)^l * (-zeta_N)^j, beta embedded at the conductor.
// Conductor must be an odd multiple of 21 (21 and 63 are the used cases).
std::set<std::pair<int, long>> scan_divisibility(long conductor, int l_max, long j_count,
                                                 int threads = 1);

struct NonDivisibility63 {
    bool divisible;
    std::vector<int> parity;  // mod-2 power-basis coordinates, length 36
};
// beta + conj(beta) * (-zeta63)^t at conductor 63.
NonDivisibility63 verify_nondivisibility_63(long t);

struct FamilySample {
    int sign;  // +1 or -1, selecting (1 +- sqrt(-7))/2
    int l;     // 0 <= l <= 6b
    long j;    // root-of-unity index
};
// Instantiates x = (1 +- sqrt(-7))/2 * sqrt(-3)^a * beta^l * conj(beta)^(6b-l)
// * v^b * w^j at conductor N = 3^a 7^b and checks x * conj(x) = 2N.
bool solution_family_check(int a, int b, const std::vector<FamilySample>& samples);

struct PowerSum {
    CycRat value;          // x1^i + x1^(-i), conjugation-invariant
    BigRat constant_term;  // its zeta^0 coefficient
};
PowerSum power_sum_x1(unsigned i);

// Least c >= 1 with 7^c (x1^i + x1^(-i)) integral and congruent to 2 mod 4
// (constant coordinate 2 mod 4, every other coordinate 0 mod 4); verifies
// that c+1 works as well.  Throws if no c <= 64 exists.
int min_c_mod4(unsigned i);

enum class Conclusion { Contradiction, Inconclusive };

struct Table4Comparison {
    long t;
    bool verdict_not_divisible;
    std::vector<int> computed_positions;   // 1-indexed odd power-basis coordinates
    std::vector<int> reference_positions;  // recorded from a reduced-basis computation
    bool positions_match;
};

struct PartitionCertificate {
    int a = 0, b = 0;
    long N = 0;  // 3^a * 7^b
    std::vector<CheckResult> foundation_checks;
    std::set<std::pair<int, long>> scan_t1;              // conductor-21 scan
    std::vector<std::pair<int, long>> scan_63;           // conductor-63 scan (a >= 2)
    int possible_ratio_set_size = 0;                     // |S| = 8b + 2
    int c_exponent = 0;                                  // C = max_i min_c_mod4(i)
    std::vector<std::string> power_sum_constants;        // constants of x1^i + x1^(-i)
    std::vector<long long> parity_relation_raw;          // constant coefficient of 7^C x Fourier relation
    std::vector<long long> parity_relation;              // primitive integer relation over (b_1..b_{4b+2})
    Conclusion conclusion = Conclusion::Inconclusive;
    std::string failed_step;                             // set when inconclusive
    std::vector<Table4Comparison> table4;                // filled under strict mode
};

// Full pipeline for N = 3^a 7^b.  phi(N) is capped at 2000 unless
// allow_large; strict_table4 additionally records the coordinate-level
// comparison against the recorded reference vectors (basis-dependent,
// non-binding).
PartitionCertificate contradiction_certificate(int a, int b, bool strict_table4 = false,
                                               bool allow_large = false, int threads = 1);

// Byte-deterministic JSON rendering (fixed key order, schema_version field).
std::string certificate_to_json(const PartitionCertificate& cert, int indent = 2);

}  // namespace gbfv::part

#endif
