#ifndef GBFV_DIOPHANTINE_HPP
#define GBFV_DIOPHANTINE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gbfv::dio {

using u64 = std::uint64_t;
using i64 = std::int64_t;

enum class EqFamily { Q1, Q2, System };

// Minimal exponent together with a witness solution.  `found == false` means
// no exponent <= searched_up_to admits a solution; never silent.
struct MinExponentResult {
    EqFamily family = EqFamily::Q1;
    u64 p1 = 0, p2 = 0;
    bool found = false;
    int m = 0;                       // the minimal exponent (L for Q2)
    std::vector<i64> witness;        // Q1: (A,B); Q2: (x,y); System: (X,Y,Z,W,A,B)
    int which_equation = 0;          // Q2 only: 1 or 2
    std::optional<int> m1, m2;       // Q2 diagnostics
    int searched_up_to = 0;
};

// Least m <= cap with p1*A^2 + p2*B^2 = 2^(m+2), A,B > 0; witness has
// minimal A.
MinExponentResult min_exponent_q1(u64 p1, u64 p2, int cap = 40);

// L = min(m1, m2) where 2^(m1+2) = x^2 + p1*y^2 and 2^(m2+2) = x^2 +
// p1*p2*y^2, over solutions with y != 0 (y = 0 only ever solves even
// exponents and corresponds to the rational-integer solutions the minimal
// exponent is defined to exclude).
MinExponentResult min_exponent_q2(u64 p1, u64 p2, int cap = 40);

// Least m <= cap such that
//   2^(m+4) = p1^2 X^2 + p2 Y^2 + 2 p1 p2 (Z^2 + W^2)
//   X*Y + 2*B*Z*W + A*(W^2 - Z^2) = 0
// has an integer solution, where p2 = A^2 + B^2 with A odd.  Requires
// p2 = 1 mod 4.  on_exponent, when set, is called before each per-m scan.
MinExponentResult min_exponent_system(u64 p1, u64 p2, int cap = 40, int threads = 1,
                                      const std::function<void(int)>& on_exponent = {});

// p2 = A^2 + B^2 with A odd normalized to A = 1 mod 4 and B > 0.
std::pair<i64, i64> two_square_decomposition(u64 p2);

// Per-exponent solvability, exposed for the oracle-equivalence tests.
bool q1_solvable(u64 p1, u64 p2, int m);
bool q2_solvable(u64 modulus, int m);  // x^2 + modulus*y^2 = 2^(m+2), y != 0
std::optional<std::array<i64, 4>> system_solution_at(u64 p1, u64 p2, int m, i64 A, i64 B,
                                                     int threads = 1);

// Exact substitution check of a returned witness (arbitrary precision).
bool verify_witness(const MinExponentResult& r);

std::string family_name(EqFamily f);

}  // namespace gbfv::dio

#endif
