#ifndef GBFV_SURVEY_HPP
#define GBFV_SURVEY_HPP

#include <cstdint>
#include <string>

#include "gbfv/numtheory.hpp"

namespace gbfv::survey {

using nt::u64;
using nt::Family;

// One table row: pairs (p1, p2) with p1, p2 <= B in the family's residue
// classes mod 8, Legendre(p1/p2) = -1 (condition 1), the order-of-2 condition
// (both conditions), and for the Thm2/Thm3 families the non-quartic-residue
// count.  p1 = 3511 is excluded throughout.
struct SurveyRow {
    Family family = Family::Thm1;
    u64 bound = 0;
    u64 count_condition1 = 0;
    u64 count_order = 0;
    u64 count_nonquartic = 0;  // families Thm2/Thm3 only, else 0
    // Ratios as exact quotients rendered half-up to 10 decimals.
    std::string r1() const;  // count_order / count_condition1
    std::string r2() const;  // count_order / count_nonquartic
};

SurveyRow survey(Family family, u64 bound, int threads = 0);  // 0 = all cores

std::string csv_header();
std::string to_csv(const SurveyRow& row);

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Truncated Euler product / series with a rigorous tail bound: the true
// constant lies in [value - tail_bound, value + tail_bound].
struct DensityEstimate {
    double value = 0;
    double tail_bound = 0;
    u64 cutoff = 0;
};

// A = prod_p (1 - 1/(p(p-1))) over primes p <= cutoff.
DensityEstimate artin_constant(u64 prime_cutoff);
// delta = sum over odd squarefree r <= cutoff of mu(r)/(8 r phi(r));
// equals A/4.
DensityEstimate delta_density(u64 r_cutoff);

// Exact decimal rendering of n/d, rounded half-up to `digits` places.
std::string ratio_decimal(u64 n, u64 d, int digits = 10);

}  // namespace gbfv::survey

#endif
