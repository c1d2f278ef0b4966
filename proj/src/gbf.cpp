#include "gbfv/gbf.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gbfv/partition.hpp"

namespace gbfv::gbf {

using cyclo::BigInt;

ModFunction make_function(long q, std::vector<long> values) {
    if (q < 2) throw std::invalid_argument("modulus must be >= 2");
    if (static_cast<long>(values.size()) != q)
        throw std::invalid_argument("value table must have length q");
    for (auto& v : values) {
        v %= q;
        if (v < 0) v += q;
    }
    return ModFunction{q, std::move(values)};
}

ModFunction parse_function(long q, const std::string& spec) {
    std::vector<long> vals(q);
    if (spec == "identity") {
        for (long x = 0; x < q; ++x) vals[x] = x;
    } else if (spec == "square") {
        for (long x = 0; x < q; ++x) vals[x] = x * x % q;
    } else if (spec == "zero") {
        // all zero
    } else if (spec.rfind("const=", 0) == 0) {
        long c = std::stol(spec.substr(6));
        for (auto& v : vals) v = c;
    } else {
        vals.clear();
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) vals.push_back(std::stol(item));
    }
    return make_function(q, std::move(vals));
}

long spectrum_conductor(long q) {
    if (q < 2) throw std::invalid_argument("modulus must be >= 2");
    if (q % 2 == 1) return q == 1 ? 3 : q;
    if (q % 4 == 0) throw std::invalid_argument("unsupported modulus: q = 0 mod 4");
    long n = q / 2;
    return n == 1 ? 3 : n;
}

namespace {

// zeta_q^e as an element of Q(zeta_conductor).
CycInt zeta_q_pow(long q, long conductor, long e) {
    e %= q;
    if (e < 0) e += q;
    if (q % 2 == 1) return CycInt::zeta_pow(conductor, e * (conductor / q));
    long n = q / 2;
    if (n == 1) return CycInt::constant(conductor, (e % 2) ? -1 : 1);
    return cyclo::zeta2N_pow(n, e);
}

}  // namespace

std::vector<CycInt> fourier_spectrum(const ModFunction& f) {
    long q = f.q;
    long conductor = spectrum_conductor(q);
    // One table lookup per (x, lambda); accumulate raw coefficient vectors
    // and reduce once per lambda.
    std::vector<CycInt> table(q);
    for (long e = 0; e < q; ++e) table[e] = zeta_q_pow(q, conductor, e);
    std::vector<CycInt> spectrum;
    spectrum.reserve(q);
    for (long lam = 0; lam < q; ++lam) {
        CycInt acc = CycInt::zero(conductor);
        for (long x = 0; x < q; ++x) {
            long e = (f.values[x] - lam * x) % q;
            if (e < 0) e += q;
            acc = acc + table[e];
        }
        spectrum.push_back(std::move(acc));
    }
    return spectrum;
}

bool is_gbf(const ModFunction& f) {
    long conductor = spectrum_conductor(f.q);
    CycInt target = CycInt::constant(conductor, f.q);
    for (const auto& alpha : fourier_spectrum(f))
        if (alpha * alpha.conj() != target) return false;
    return true;
}

std::optional<ModFunction> exhaustive_search(long q, int threads) {
    if (q < 2) throw std::invalid_argument("modulus must be >= 2");
    if (q > 6) throw std::invalid_argument("exhaustive search bounded at q <= 6");
    spectrum_conductor(q);  // reject q = 4
    // f(0) = 0; scan the q^(q-1) remaining tables in lexicographic order.
    unsigned long total = 1;
    for (long i = 1; i < q; ++i) total *= static_cast<unsigned long>(q);

    auto decode = [&](unsigned long idx) {
        std::vector<long> vals(q, 0);
        for (long pos = q - 1; pos >= 1; --pos) {
            vals[pos] = static_cast<long>(idx % q);
            idx /= q;
        }
        return vals;
    };

    int nthreads = std::max(1, threads);
    if (nthreads == 1) {
        for (unsigned long idx = 0; idx < total; ++idx) {
            ModFunction f{q, decode(idx)};
            if (is_gbf(f)) return f;
        }
        return std::nullopt;
    }
    // Parallel over the first function value; the winner is the lowest index.
    std::atomic<unsigned long> winner{total};
    std::vector<std::thread> pool;
    unsigned long stripe = total / static_cast<unsigned long>(q);
    for (long v1 = 0; v1 < q; ++v1) {
        pool.emplace_back([&, v1] {
            for (unsigned long k = 0; k < stripe; ++k) {
                unsigned long idx = static_cast<unsigned long>(v1) * stripe + k;
                if (idx >= winner.load(std::memory_order_relaxed)) return;
                ModFunction f{q, decode(idx)};
                if (is_gbf(f)) {
                    unsigned long cur = winner.load();
                    while (idx < cur && !winner.compare_exchange_weak(cur, idx)) {}
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    unsigned long best = winner.load();
    if (best == total) return std::nullopt;
    return ModFunction{q, decode(best)};
}

bool spectrum_in_family_42(const ModFunction& f) {
    if (f.q != 42) throw std::invalid_argument("family check is specific to q = 42");
    if (!is_gbf(f)) return true;  // conditional check: nothing to verify
    const auto& k = part::constants_21();
    std::vector<CycInt> family;
    for (int sign = 0; sign < 2; ++sign) {
        const CycInt& half = sign == 0 ? k.half_plus : k.half_minus;
        for (int i = 0; i <= 6; ++i) {
            CycInt base = half * k.sqrt_m3 * k.v * k.beta.pow(i) * k.beta.conj().pow(6 - i);
            for (long j = 0; j < 42; ++j) family.push_back(base * part::root_of_unity(21, j));
        }
    }
    for (const auto& alpha : fourier_spectrum(f)) {
        bool hit = false;
        for (const auto& y : family)
            if (alpha == y) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

}  // namespace gbfv::gbf
