#ifndef GBFV_GBF_HPP
#define GBFV_GBF_HPP

#include <optional>
#include <string>
#include <vector>

#include "gbfv/cyclotomic.hpp"

namespace gbfv::gbf {

using cyclo::CycInt;

// A function Z_q -> Z_q given by its value table.
struct ModFunction {
    long q = 0;
    std::vector<long> values;  // length q, entries reduced into [0, q)
};

ModFunction make_function(long q, std::vector<long> values);
// "identity", "square", "zero", "const=c" or a comma-separated value list.
ModFunction parse_function(long q, const std::string& spec);

// Conductor the spectrum lives in: q for odd q, q/2 for q = 2 mod 4
// (q/2 = 1 falls back to conductor 3, where the values are rational).
// q = 0 mod 4 is unsupported.
long spectrum_conductor(long q);

// alpha(lambda) = sum_x zeta_q^(f(x) - lambda x) for all lambda, exact.
std::vector<CycInt> fourier_spectrum(const ModFunction& f);

// True iff alpha(lambda) * conj(alpha(lambda)) = q for every lambda.
bool is_gbf(const ModFunction& f);

// First function (f(0) = 0, remaining values in lexicographic order) whose
// spectrum is flat, or nullopt after the complete scan.  The shift symmetry
// f -> f + const makes f(0) = 0 lossless.  q <= 6 only.
std::optional<ModFunction> exhaustive_search(long q, int threads = 1);

// When f is flat at q = 42, every alpha must be one of the 588 products
// (1 +- sqrt(-7))/2 * sqrt(-3) * v * beta^i conj(beta)^(6-i) * w^j; vacuously
// true for non-flat f.
bool spectrum_in_family_42(const ModFunction& f);

}  // namespace gbfv::gbf

#endif
