#include "gbfv/survey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include <gmpxx.h>

namespace gbfv::survey {

namespace {

// Odd-prime list + ord_p(2) per prime, shared by the three families.
struct PrimeTables {
    std::vector<u64> primes;        // odd primes <= bound
    std::vector<u64> ord2;          // ord_{p}(2), same indexing
    std::vector<int> cls;           // p mod 8
    std::vector<bool> quartic;      // 2^((p-1)/4) = 1 mod p (p = 1 mod 8 only)
};

PrimeTables build_tables(u64 bound) {
    std::vector<bool> composite(bound + 1, false);
    std::vector<u64> spf(bound + 1, 0);
    for (u64 i = 2; i <= bound; ++i) {
        if (!composite[i]) {
            spf[i] = i;
            for (u64 j = i * i; j <= bound; j += i) {
                composite[j] = true;
                if (!spf[j]) spf[j] = i;
            }
        }
    }
    PrimeTables t;
    for (u64 p = 3; p <= bound; p += 2) {
        if (composite[p]) continue;
        t.primes.push_back(p);
        // ord_p(2): start from p-1 and strip prime factors while 2^(t/q) = 1.
        u64 ord = p - 1;
        u64 m = p - 1;
        while (m > 1) {
            u64 q = spf[m];
            while (m % q == 0) m /= q;
            while (ord % q == 0 && nt::powmod(2, ord / q, p) == 1) ord /= q;
        }
        t.ord2.push_back(ord);
        t.cls.push_back(static_cast<int>(p % 8));
        t.quartic.push_back(p % 8 == 1 && nt::powmod(2, (p - 1) / 4, p) == 1);
    }
    return t;
}

struct Counts {
    u64 first = 0, order = 0, nonq = 0;
};

}  // namespace

SurveyRow survey(Family family, u64 bound, int threads) {
    if (bound < 10) throw std::invalid_argument("survey: bound must be >= 10");
    PrimeTables t = build_tables(bound);

    int cls1 = family == Family::Thm2 ? 7 : 3;
    int cls2 = family == Family::Thm1 ? 5 : 1;
    u64 order_div = family == Family::Thm1 ? 2 : 4;
    bool track_nonq = family != Family::Thm1;

    std::vector<std::size_t> idx1, idx2;
    for (std::size_t i = 0; i < t.primes.size(); ++i) {
        if (t.cls[i] == cls1 && t.primes[i] != 3511) idx1.push_back(i);
        if (t.cls[i] == cls2) idx2.push_back(i);
    }

    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min<int>(nthreads, 64));

    auto count_stripe = [&](std::size_t lo, std::size_t step) {
        Counts c;
        for (std::size_t a = lo; a < idx1.size(); a += step) {
            std::size_t i = idx1[a];
            u64 p1 = t.primes[i];
            for (std::size_t b : idx2) {
                u64 p2 = t.primes[b];
                if (nt::jacobi(static_cast<nt::i64>(p1), p2) != -1) continue;
                c.first++;
                u64 f1 = t.ord2[i], f2 = t.ord2[b];
                u64 ord = f1 / std::gcd(f1, f2) * f2;
                if (ord == (p1 - 1) * (p2 - 1) / order_div) c.order++;
                if (track_nonq && !t.quartic[b]) c.nonq++;
            }
        }
        return c;
    };

    Counts total;
    if (nthreads == 1) {
        total = count_stripe(0, 1);
    } else {
        std::vector<Counts> parts(nthreads);
        std::vector<std::thread> pool;
        for (int k = 0; k < nthreads; ++k)
            pool.emplace_back([&, k] { parts[k] = count_stripe(k, nthreads); });
        for (auto& th : pool) th.join();
        for (const auto& c : parts) {
            total.first += c.first;
            total.order += c.order;
            total.nonq += c.nonq;
        }
    }

    SurveyRow row;
    row.family = family;
    row.bound = bound;
    row.count_condition1 = total.first;
    row.count_order = total.order;
    row.count_nonquartic = total.nonq;
    return row;
}

std::string ratio_decimal(u64 n, u64 d, int digits) {
    if (d == 0) return "";
    mpz_class scaled = mpz_class(static_cast<unsigned long>(n));
    for (int i = 0; i < digits; ++i) scaled *= 10;
    mpz_class q = (2 * scaled + static_cast<unsigned long>(d)) / (2 * mpz_class(static_cast<unsigned long>(d)));
    std::string s = q.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return s;
}

std::string SurveyRow::r1() const { return ratio_decimal(count_order, count_condition1); }
std::string SurveyRow::r2() const {
    return count_nonquartic ? ratio_decimal(count_order, count_nonquartic) : "";
}

std::string csv_header() { return "B,first,order,nonquartic,r1,r2"; }

std::string to_csv(const SurveyRow& row) {
    std::string nonq = row.family == Family::Thm1 ? "" : std::to_string(row.count_nonquartic);
    return std::to_string(row.bound) + "," + std::to_string(row.count_condition1) + "," +
           std::to_string(row.count_order) + "," + nonq + "," + row.r1() + "," + row.r2();
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Thm1: return "thm1";
        case Family::Thm2: return "thm2";
        case Family::Thm3: return "thm3";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "thm1") return Family::Thm1;
    if (name == "thm2") return Family::Thm2;
    if (name == "thm3") return Family::Thm3;
    throw std::invalid_argument("unknown family (expected thm1|thm2|thm3): " + name);
}

DensityEstimate artin_constant(u64 prime_cutoff) {
    if (prime_cutoff < 100) throw std::invalid_argument("artin: cutoff must be >= 100");
    std::vector<bool> composite(prime_cutoff + 1, false);
    long double prod = 1.0L;
    for (u64 p = 2; p <= prime_cutoff; ++p) {
        if (composite[p]) continue;
        for (u64 j = p * p; j <= prime_cutoff; j += p) composite[j] = true;
        prod *= 1.0L - 1.0L / (static_cast<long double>(p) * (p - 1));
    }
    // Tail: 0 < -log prod_{p > x} (1 - 1/(p(p-1))) < (1/(1-eps)) sum_{n > x}
    // 1/(n(n-1)) = (1/(1-eps))/x with eps = 1/(x(x-1)); the true A lies in
    // [value * exp(-tail_log), value].
    long double x = static_cast<long double>(prime_cutoff);
    long double tail_log = (1.0L / (1.0L - 1.0L / (x * (x - 1)))) / x;
    DensityEstimate e;
    e.cutoff = prime_cutoff;
    e.value = static_cast<double>(prod);
    e.tail_bound = static_cast<double>(prod * (1.0L - std::exp(-tail_log))) + 1e-12;
    return e;
}

DensityEstimate delta_density(u64 r_cutoff) {
    if (r_cutoff < 100) throw std::invalid_argument("delta: cutoff must be >= 100");
    // Sieve mu and phi up to the cutoff.
    std::vector<u64> spf(r_cutoff + 1, 0);
    for (u64 i = 2; i <= r_cutoff; ++i) {
        if (spf[i]) continue;
        for (u64 j = i; j <= r_cutoff; j += i)
            if (!spf[j]) spf[j] = i;
    }
    long double sum = 1.0L / 8.0L;  // r = 1 term
    for (u64 r = 3; r <= r_cutoff; r += 2) {
        u64 m = r;
        int mu = 1;
        u64 phi = 1;
        bool squarefree = true;
        while (m > 1) {
            u64 p = spf[m];
            m /= p;
            if (m % p == 0) { squarefree = false; break; }
            mu = -mu;
            phi *= p - 1;
        }
        if (!squarefree) continue;
        sum += static_cast<long double>(mu) /
               (8.0L * static_cast<long double>(r) * static_cast<long double>(phi));
    }
    // |tail| <= (1/8) sum_{r > x} 1/(r phi(r)) with phi(r) > r / (e^gamma
    // loglog r + 2.51/loglog r); integral comparison gives the bound below.
    long double x = static_cast<long double>(r_cutoff);
    long double ll = std::log(std::log(x));
    long double eg = 1.7810724179901979L;  // e^gamma
    long double tail = (eg * (ll / x + 1.0L / (x * std::log(x))) + 2.51L / (ll * x)) / 8.0L;
    DensityEstimate e;
    e.cutoff = r_cutoff;
    e.value = static_cast<double>(sum);
    e.tail_bound = static_cast<double>(tail) + 1e-12;
    return e;
}

}  // namespace gbfv::survey
