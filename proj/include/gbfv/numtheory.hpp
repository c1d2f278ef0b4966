#ifndef GBFV_NUMTHEORY_HPP
#define GBFV_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gbfv::nt {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// (b^e) mod m, m < 2^63, via 128-bit intermediates.
u64 powmod(u64 b, u64 e, u64 m);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

// Deterministic for all 64-bit inputs (trial division + fixed Miller-Rabin
// witness set).
bool is_prime(u64 n);

// Prime factorization n = prod p_i^e_i, p_i ascending. Thread-safe cache
// shared with the survey sieves.
std::vector<std::pair<u64, int>> factorize(u64 n);

u64 euler_phi(u64 n);

// Squarefree radical of n.
u64 radical(u64 n);

// Jacobi symbol (a/n), n odd positive.
int jacobi(i64 a, u64 n);

// Least t >= 1 with a^t = 1 mod n. Computed by Carmichael-lambda descent,
// not iteration. Throws std::invalid_argument when gcd(a, n) != 1.
u64 mult_order(u64 a, u64 n);

// Writes N = p^e * N' with p coprime to N'; true iff -1 lies in the cyclic
// group generated by p mod N'.  Decided via the order of p mod N' (the unique
// order-2 element of <p> is p^(ord/2)), never by unbounded scanning.
bool is_self_conjugate(u64 p, u64 N);

// Splitting data of the rational prime p in the N-th cyclotomic field.
struct SplittingParams {
    u64 e;  // ramification index
    u64 f;  // inertial degree
    u64 g;  // number of primes above p
};
SplittingParams splitting_params(u64 p, u64 N);

// Residue data of an odd prime used by the pair qualification predicates.
struct ResidueProfile {
    int class_mod_8;
    bool wieferich;               // 2^(p-1) = 1 mod p^2
    bool two_primitive_root;      // ord_p(2) = p-1
    bool two_near_primitive;      // ord_p(2) = (p-1)/2
    std::optional<bool> two_quartic_residue;  // only for p = 1 mod 8
};
ResidueProfile residue_tests(u64 p);

enum class Family { Thm1, Thm2, Thm3 };

// Everything the surveys and the qualify subcommand report for one pair.
struct PrimePairRecord {
    u64 p1 = 0, p2 = 0;
    int class1 = 0, class2 = 0;
    int legendre_p1_p2 = 0;
    u64 ord2_p1 = 0, ord2_p2 = 0, ord2_p1p2 = 0;
    bool wieferich_p1 = false, wieferich_p2 = false;
    std::optional<bool> quartic_residue_2_p2;
    bool qualifies_thm1 = false, qualifies_thm2 = false, qualifies_thm3 = false;
};
PrimePairRecord make_pair_record(u64 p1, u64 p2);

// Congruence-class + Legendre part of the family condition.
bool pair_condition1(u64 p1, u64 p2, Family family);
// Full qualification: condition 1 plus the order-of-2 condition
// (phi(p1*p2)/2 for Thm1, phi(p1*p2)/4 for Thm2/Thm3).
bool pair_qualifies(u64 p1, u64 p2, Family family);
bool pair_qualifies(const PrimePairRecord& rec, Family family);

// Minimal conductor F(m,n), a multiple of rad(m), to which a solution of
// x*conj(x) = n in Z[zeta_m] can be rotated by a root of unity.
u64 schmidt_F(u64 m, u64 n);

// Exact coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<mpz_class> cyclotomic_poly(u64 N);

}  // namespace gbfv::nt

#endif
