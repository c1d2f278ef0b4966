#include "gbfv/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace gbfv::nt {

u64 powmod(u64 b, u64 e, u64 m) {
    if (m == 1) return 0;
    unsigned __int128 r = 1, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<u64>(r);
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }
u64 lcm(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

namespace {

bool miller_rabin(u64 n, u64 a) {
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1 || a % n == 0) return true;
    for (int i = 1; i < s; ++i) {
        x = static_cast<u64>((unsigned __int128)x * x % n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // Witness set deterministic for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

namespace {

std::shared_mutex factor_cache_mutex;
std::map<u64, std::vector<std::pair<u64, int>>> factor_cache;

std::vector<std::pair<u64, int>> factorize_uncached(u64 n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

std::vector<std::pair<u64, int>> factorize(u64 n) {
    if (n <= 1) return {};
    {
        std::shared_lock lock(factor_cache_mutex);
        auto it = factor_cache.find(n);
        if (it != factor_cache.end()) return it->second;
    }
    auto f = factorize_uncached(n);
    std::unique_lock lock(factor_cache_mutex);
    return factor_cache.emplace(n, std::move(f)).first->second;
}

u64 euler_phi(u64 n) {
    if (n == 0) return 0;
    u64 r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

u64 radical(u64 n) {
    u64 r = 1;
    for (auto [p, e] : factorize(n)) r *= p;
    return r;
}

int jacobi(i64 a, u64 n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("jacobi: modulus must be odd and positive");
    i64 m = static_cast<i64>(n);
    a %= m;
    if (a < 0) a += m;
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = m % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) t = -t;
        a %= m;
    }
    return m == 1 ? t : 0;
}

namespace {

// Carmichael function lambda(n).
u64 carmichael_lambda(u64 n) {
    u64 l = 1;
    for (auto [p, e] : factorize(n)) {
        u64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        u64 lp = (p == 2 && e >= 3) ? pe / 4 : pe / p * (p - 1);
        l = lcm(l, lp);
    }
    return l;
}

}  // namespace

u64 mult_order(u64 a, u64 n) {
    if (n < 2) throw std::invalid_argument("mult_order: modulus must be >= 2");
    a %= n;
    if (std::gcd(a, n) != 1) throw std::invalid_argument("mult_order: arguments are not coprime");
    u64 t = carmichael_lambda(n);
    for (auto [q, e] : factorize(t)) {
        while (t % q == 0 && powmod(a, t / q, n) == 1) t /= q;
    }
    return t;
}

bool is_self_conjugate(u64 p, u64 N) {
    u64 Np = N;
    while (Np % p == 0) Np /= p;
    if (Np <= 2) return true;  // -1 = 1 mod N'
    if (std::gcd(p % Np, Np) != 1) return false;
    u64 t = mult_order(p, Np);
    if (t % 2 != 0) return false;
    return powmod(p, t / 2, Np) == Np - 1;
}

SplittingParams splitting_params(u64 p, u64 N) {
    if (N < 3 || N % 2 == 0) throw std::invalid_argument("splitting_params: conductor must be odd and >= 3");
    u64 pl = 1, M = N;
    while (M % p == 0) { M /= p; pl *= p; }
    SplittingParams s;
    s.e = (pl == 1) ? 1 : pl / p * (p - 1);
    s.f = (M == 1) ? 1 : mult_order(p, M);
    s.g = (M == 1) ? 1 : euler_phi(M) / s.f;
    return s;
}

ResidueProfile residue_tests(u64 p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("residue_tests: p must be an odd prime");
    ResidueProfile r;
    r.class_mod_8 = static_cast<int>(p % 8);
    r.wieferich = powmod(2, p - 1, p * p) == 1;
    u64 ord = mult_order(2, p);
    r.two_primitive_root = (ord == p - 1);
    r.two_near_primitive = (ord == (p - 1) / 2);
    if (p % 8 == 1)
        r.two_quartic_residue = powmod(2, (p - 1) / 4, p) == 1;
    else
        r.two_quartic_residue = std::nullopt;  // not applicable
    return r;
}

PrimePairRecord make_pair_record(u64 p1, u64 p2) {
    if (p1 == p2) throw std::invalid_argument("pair record: primes must be distinct");
    PrimePairRecord rec;
    rec.p1 = p1;
    rec.p2 = p2;
    rec.class1 = static_cast<int>(p1 % 8);
    rec.class2 = static_cast<int>(p2 % 8);
    rec.legendre_p1_p2 = jacobi(static_cast<i64>(p1), p2);
    rec.ord2_p1 = mult_order(2, p1);
    rec.ord2_p2 = mult_order(2, p2);
    rec.ord2_p1p2 = lcm(rec.ord2_p1, rec.ord2_p2);
    rec.wieferich_p1 = powmod(2, p1 - 1, p1 * p1) == 1;
    rec.wieferich_p2 = powmod(2, p2 - 1, p2 * p2) == 1;
    if (p2 % 8 == 1) rec.quartic_residue_2_p2 = powmod(2, (p2 - 1) / 4, p2) == 1;
    rec.qualifies_thm1 = pair_qualifies(rec, Family::Thm1);
    rec.qualifies_thm2 = pair_qualifies(rec, Family::Thm2);
    rec.qualifies_thm3 = pair_qualifies(rec, Family::Thm3);
    return rec;
}

namespace {

bool classes_match(u64 p1, u64 p2, Family family) {
    switch (family) {
        case Family::Thm1: return p1 % 8 == 3 && p2 % 8 == 5;
        case Family::Thm2: return p1 % 8 == 7 && p2 % 8 == 1;
        case Family::Thm3: return p1 % 8 == 3 && p2 % 8 == 1;
    }
    return false;
}

u64 order_divisor(Family family) { return family == Family::Thm1 ? 2 : 4; }

}  // namespace

bool pair_condition1(u64 p1, u64 p2, Family family) {
    if (p1 == p2) return false;
    return classes_match(p1, p2, family) && jacobi(static_cast<i64>(p1), p2) == -1;
}

bool pair_qualifies(u64 p1, u64 p2, Family family) {
    if (!pair_condition1(p1, p2, family)) return false;
    u64 ord = lcm(mult_order(2, p1), mult_order(2, p2));
    return ord == (p1 - 1) * (p2 - 1) / order_divisor(family);
}

bool pair_qualifies(const PrimePairRecord& rec, Family family) {
    if (!classes_match(rec.p1, rec.p2, family) || rec.legendre_p1_p2 != -1) return false;
    return rec.ord2_p1p2 == (rec.p1 - 1) * (rec.p2 - 1) / order_divisor(family);
}

u64 schmidt_F(u64 m, u64 n) {
    if (m < 2) throw std::invalid_argument("schmidt_F: m must be >= 2");
    auto mf = factorize(m);
    std::vector<u64> dn;
    for (auto [q, e] : factorize(n)) dn.push_back(q);

    u64 F = 1;
    for (auto [p, c] : mf) {
        // m_q depends only on q and the prime set of m.
        int b = 1;
        for (; b < c; ++b) {
            bool all_ok = true;
            for (u64 q : dn) {
                bool ok = false;
                if (q == p) {
                    ok = !(p == 2 && b == 1);
                } else {
                    u64 mq = 1;
                    if (m % 2 == 0) mq = 4;
                    for (auto [pi, ei] : mf)
                        if (pi != q && !(m % 2 == 0 && pi == 2)) mq *= pi;
                    u64 pb1 = 1;
                    for (int i = 0; i <= b; ++i) pb1 *= p;
                    u64 ord = (mq == 1) ? 1 : mult_order(q, mq);
                    ok = powmod(q, ord, pb1) != 1;
                }
                if (!ok) { all_ok = false; break; }
            }
            if (all_ok) break;
        }
        // b == c satisfies the cap condition unconditionally.
        u64 pb = 1;
        for (int i = 0; i < b; ++i) pb *= p;
        F *= pb;
    }
    return F;
}

namespace {

std::vector<mpz_class> poly_div_exact(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r = a;
    std::vector<mpz_class> q(a.size() - b.size() + 1);
    for (std::size_t i = a.size() - b.size() + 1; i-- > 0;) {
        mpz_class c = r[i + b.size() - 1] / b.back();
        q[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
    }
    return q;
}

std::shared_mutex phi_cache_mutex;
std::map<u64, std::vector<mpz_class>> phi_cache;

}  // namespace

std::vector<mpz_class> cyclotomic_poly(u64 N) {
    if (N == 0) throw std::invalid_argument("cyclotomic_poly: N must be positive");
    {
        std::shared_lock lock(phi_cache_mutex);
        auto it = phi_cache.find(N);
        if (it != phi_cache.end()) return it->second;
    }
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d.
    std::vector<mpz_class> a(N + 1);
    a[0] = -1;
    a[N] = 1;
    for (u64 d = 1; d < N; ++d)
        if (N % d == 0) a = poly_div_exact(a, cyclotomic_poly(d));
    std::unique_lock lock(phi_cache_mutex);
    return phi_cache.emplace(N, std::move(a)).first->second;
}

}  // namespace gbfv::nt
