#ifndef GBFV_CYCLOTOMIC_HPP
#define GBFV_CYCLOTOMIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gbfv::cyclo {

// Exact arithmetic in Q(zeta_N) for odd N >= 3.  Elements are stored on the
// power basis {1, z, ..., z^(phi(N)-1)}, which is an integral basis, reduced
// modulo the N-th cyclotomic polynomial.  Equal conductor + equal coefficient
// vector is the equality; coefficients are kept canonical (mpq lowest terms,
// positive denominator).  Values are immutable after construction.
template <typename Coeff>
class Element {
  public:
    Element() = default;  // conductor 0 placeholder, unusable in arithmetic

    static Element zero(long conductor);
    static Element one(long conductor) { return constant(conductor, 1); }
    static Element constant(long conductor, Coeff value);
    static Element zeta_pow(long conductor, long k);
    // Canonical representative of sum c_i z^i for an arbitrary-degree
    // coefficient list; idempotent on already-reduced input.
    static Element reduce(long conductor, std::vector<Coeff> poly);

    long conductor() const { return conductor_; }
    std::size_t degree() const { return coeffs_.size(); }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    const Coeff& coeff(std::size_t k) const { return coeffs_.at(k); }
    const Coeff& constant_term() const { return coeffs_.at(0); }

    bool is_zero() const;
    bool is_constant() const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    Element operator*(const Coeff& s) const;
    bool operator==(const Element& o) const = default;

    Element pow(unsigned long k) const;

    // zeta |-> zeta^a for gcd(a, N) = 1.
    Element galois(long a) const;
    Element conj() const { return galois(conductor_ - 1); }
    // Ring embedding zeta_N |-> zeta_M^(M/N) for N | M, M odd.
    Element embed(long new_conductor) const;

  private:
    long conductor_ = 0;
    std::vector<Coeff> coeffs_;
};

using BigInt = mpz_class;
using BigRat = mpq_class;
using CycInt = Element<BigInt>;
using CycRat = Element<BigRat>;

CycRat to_rational(const CycInt& x);
// Succeeds iff every coefficient is an integer.
std::optional<CycInt> to_integral(const CycRat& x);

// Product of all Galois images; always a rational number.
BigRat absolute_norm(const CycRat& x);
BigInt absolute_norm(const CycInt& x);
// Independent second route: resultant of Phi_N with the representing
// polynomial, by the subresultant-free rational Euclidean scheme.
BigRat absolute_norm_resultant(const CycRat& x);

// x^-1 as conj-product quotient: product of the nontrivial Galois images
// divided by the norm.  Throws on zero.
CycRat inverse(const CycRat& x);

// zeta_{2N}^j for the principal root zeta_{2N} = -zeta_N^((N+1)/2),
// i.e. (-1)^j * zeta_N^(j(N+1)/2 mod N).
CycInt zeta2N_pow(long N, long j);

// Quadratic Gauss sum sum_a (a/p) zeta_N^(aN/p) for an odd prime p | N;
// squares to (-1)^((p-1)/2) * p.
CycInt gauss_sum(long p, long N);

// omega_N = prod gauss_sum(p_i, N)^(e_i) over N = prod p_i^e_i.  Requires
// every p_i self-conjugate mod N; omega_N * conj(omega_N) = N.
CycInt omega(long N);

bool is_unit(const CycInt& x);

// Coefficient-wise divisibility on the power basis (an integral basis, so
// this is divisibility in the ring of integers).
bool int_divisible(const CycInt& x, const BigInt& k);
bool congruent_mod(const CycInt& x, const CycInt& y, const BigInt& k);

// Text form "z{N}: c0 + c1*z^1 - ...": parses and prints exactly.
std::string to_string(const CycRat& x);
std::string to_string(const CycInt& x);
CycRat parse_cyc_rat(const std::string& text);
CycInt parse_cyc_int(const std::string& text);

}  // namespace gbfv::cyclo

#endif
