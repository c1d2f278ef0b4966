#include "gbfv/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <gmpxx.h>

#include "gbfv/numtheory.hpp"

namespace gbfv::dio {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

u128 isqrt_u128(u128 n) {
    if (n == 0) return 0;
    u128 r = static_cast<u128>(std::sqrt(static_cast<double>(static_cast<long double>(n))));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool perfect_square(u128 n, u128* root) {
    u128 r = isqrt_u128(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

void check_pair(u64 p1, u64 p2, int cap) {
    if (p1 == p2 || p1 < 3 || p2 < 3 || !nt::is_prime(p1) || !nt::is_prime(p2))
        throw std::invalid_argument("solver: p1, p2 must be distinct odd primes");
    if (cap < 1 || cap > 120) throw std::invalid_argument("solver: cap out of range [1,120]");
}

}  // namespace

bool q1_solvable(u64 p1, u64 p2, int m) {
    u128 t = u128(1) << (m + 2);
    for (u64 a = 1; u128(p1) * a * a <= t; ++a) {
        u128 rem = t - u128(p1) * a * a;
        if (rem % p2 != 0) continue;
        if (perfect_square(rem / p2, nullptr)) return true;
    }
    return false;
}

MinExponentResult min_exponent_q1(u64 p1, u64 p2, int cap) {
    check_pair(p1, p2, cap);
    MinExponentResult r;
    r.family = EqFamily::Q1;
    r.p1 = p1;
    r.p2 = p2;
    r.searched_up_to = cap;
    for (int m = 1; m <= cap; ++m) {
        u128 t = u128(1) << (m + 2);
        for (u64 a = 1; u128(p1) * a * a <= t; ++a) {
            u128 rem = t - u128(p1) * a * a;
            if (rem % p2 != 0) continue;
            u128 b;
            if (!perfect_square(rem / p2, &b)) continue;
            r.found = true;
            r.m = m;
            r.witness = {static_cast<i64>(a), static_cast<i64>(static_cast<u64>(b))};
            if (!verify_witness(r)) throw std::logic_error("q1: witness failed re-verification");
            return r;
        }
    }
    return r;
}

bool q2_solvable(u64 modulus, int m) {
    u128 t = u128(1) << (m + 2);
    for (u64 y = 1; u128(modulus) * y * y <= t; ++y) {
        if (perfect_square(t - u128(modulus) * y * y, nullptr)) return true;
    }
    return false;
}

namespace {

std::optional<std::pair<i64, i64>> q2_witness(u64 modulus, int m) {
    u128 t = u128(1) << (m + 2);
    for (u64 y = 1; u128(modulus) * y * y <= t; ++y) {
        u128 x;
        if (perfect_square(t - u128(modulus) * y * y, &x))
            return std::make_pair(static_cast<i64>(static_cast<u64>(x)), static_cast<i64>(y));
    }
    return std::nullopt;
}

}  // namespace

MinExponentResult min_exponent_q2(u64 p1, u64 p2, int cap) {
    check_pair(p1, p2, cap);
    MinExponentResult r;
    r.family = EqFamily::Q2;
    r.p1 = p1;
    r.p2 = p2;
    r.searched_up_to = cap;
    for (int m = 1; m <= cap && !r.m1; ++m)
        if (q2_solvable(p1, m)) r.m1 = m;
    for (int m = 1; m <= cap && !r.m2; ++m)
        if (q2_solvable(p1 * p2, m)) r.m2 = m;
    if (!r.m1 && !r.m2) return r;
    r.found = true;
    if (r.m1 && (!r.m2 || *r.m1 <= *r.m2)) {
        r.m = *r.m1;
        r.which_equation = 1;
        auto w = q2_witness(p1, r.m);
        r.witness = {w->first, w->second};
    } else {
        r.m = *r.m2;
        r.which_equation = 2;
        auto w = q2_witness(p1 * p2, r.m);
        r.witness = {w->first, w->second};
    }
    if (!verify_witness(r)) throw std::logic_error("q2: witness failed re-verification");
    return r;
}

std::pair<i64, i64> two_square_decomposition(u64 p2) {
    if (p2 % 4 != 1) throw std::invalid_argument("two-square decomposition needs p = 1 mod 4");
    for (u64 a = 1; a * a <= p2; a += 2) {
        u128 rest = p2 - a * a;
        u128 b;
        if (perfect_square(rest, &b)) {
            i64 A = static_cast<i64>(a);
            if (A % 4 == 3) A = -A;
            return {A, static_cast<i64>(static_cast<u64>(b))};
        }
    }
    throw std::logic_error("two-square decomposition not found");
}

namespace {

struct SystemCandidate {
    i64 X, Y, Z, W;
    // scan-order key: (Z, index of W in the 0, 1, -1, 2, -2, ... order)
    std::pair<i64, i64> key() const {
        i64 word = W > 0 ? 2 * W - 1 : -2 * W;
        return {Z, word};
    }
};

// Scan one Z-stripe of the (Z, W) ball for exponent m; returns the candidate
// earliest in scan order, if any.
std::optional<SystemCandidate> scan_stripe(u64 p1, u64 p2, int m, i64 A, i64 B, i64 z_lo, i64 z_hi,
                                           i64 z_step) {
    u128 t = u128(1) << (m + 4);
    u128 q = u128(2) * p1 * p2;
    std::optional<SystemCandidate> best;
    for (i64 Z = z_lo; Z <= z_hi; Z += z_step) {
        if (q * Z * Z > t) break;
        i64 wmax = static_cast<i64>(isqrt_u128((t - q * Z * Z) / q));
        for (i64 wi = 0; wi <= 2 * wmax; ++wi) {
            i64 W = (wi % 2 == 0) ? wi / 2 : -(wi + 1) / 2;
            if (Z == 0 && W < 0) continue;  // (0,W) ~ (0,-W)
            i128 zz = i128(Z) * Z, ww = i128(W) * W;
            u128 ball = u128(zz + ww);
            if (q * ball > t) continue;
            i128 R = i128(t - q * ball);
            i128 S = A * (zz - ww) - i128(2) * B * Z * W;
            if (S == 0) continue;  // X*Y = S must be nonzero
            // X^2 is a root of p1^2 u^2 - R u + p2 S^2 = 0.
            i128 disc = R * R - i128(4) * p1 * p1 * p2 * S * S;
            if (disc < 0) continue;
            u128 sd;
            if (!perfect_square(u128(disc), &sd)) continue;
            for (int pick = 0; pick < 2; ++pick) {
                i128 num = pick == 0 ? R - i128(sd) : R + i128(sd);
                if (num <= 0) continue;
                i128 den = i128(2) * p1 * p1;
                if (num % den != 0) continue;
                i128 u = num / den;
                u128 x;
                if (!perfect_square(u128(u), &x)) continue;
                i128 y2num = R - i128(p1) * p1 * u;
                if (y2num < 0 || y2num % p2 != 0) continue;
                u128 y;
                if (!perfect_square(u128(y2num / p2), &y)) continue;
                i64 X = static_cast<i64>(static_cast<u64>(x));
                i64 Yabs = static_cast<i64>(static_cast<u64>(y));
                if (i128(X) * Yabs != (S > 0 ? S : -S)) continue;
                i64 Y = S > 0 ? Yabs : -Yabs;
                SystemCandidate c{X, Y, Z, W};
                if (!best || c.key() < best->key()) best = c;
                break;
            }
        }
    }
    return best;
}

}  // namespace

std::optional<std::array<i64, 4>> system_solution_at(u64 p1, u64 p2, int m, i64 A, i64 B,
                                                     int threads) {
    u128 t = u128(1) << (m + 4);
    u128 q = u128(2) * p1 * p2;
    i64 zmax = static_cast<i64>(isqrt_u128(t / q));
    int nt_ = std::max(1, threads);
    std::optional<SystemCandidate> best;
    if (nt_ == 1 || zmax < 64) {
        best = scan_stripe(p1, p2, m, A, B, 0, zmax, 1);
    } else {
        std::vector<std::optional<SystemCandidate>> results(nt_);
        std::vector<std::thread> pool;
        for (int i = 0; i < nt_; ++i)
            pool.emplace_back([&, i] { results[i] = scan_stripe(p1, p2, m, A, B, i, zmax, nt_); });
        for (auto& th : pool) th.join();
        for (auto& c : results)
            if (c && (!best || c->key() < best->key())) best = c;
    }
    if (!best) return std::nullopt;
    return std::array<i64, 4>{best->X, best->Y, best->Z, best->W};
}

MinExponentResult min_exponent_system(u64 p1, u64 p2, int cap, int threads,
                                      const std::function<void(int)>& on_exponent) {
    check_pair(p1, p2, cap);
    auto [A, B] = two_square_decomposition(p2);
    MinExponentResult r;
    r.family = EqFamily::System;
    r.p1 = p1;
    r.p2 = p2;
    r.searched_up_to = cap;
    for (int m = 1; m <= cap; ++m) {
        if (on_exponent) on_exponent(m);
        auto sol = system_solution_at(p1, p2, m, A, B, threads);
        if (!sol) continue;
        r.found = true;
        r.m = m;
        r.witness = {(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3], A, B};
        if (!verify_witness(r)) throw std::logic_error("system: witness failed re-verification");
        return r;
    }
    return r;
}

bool verify_witness(const MinExponentResult& r) {
    if (!r.found) return false;
    mpz_class p1(static_cast<unsigned long>(r.p1)), p2(static_cast<unsigned long>(r.p2));
    switch (r.family) {
        case EqFamily::Q1: {
            if (r.witness.size() != 2 || r.witness[0] <= 0 || r.witness[1] <= 0) return false;
            mpz_class A(static_cast<long>(r.witness[0])), B(static_cast<long>(r.witness[1]));
            mpz_class lhs = p1 * A * A + p2 * B * B;
            mpz_class rhs = mpz_class(1) << (r.m + 2);
            return lhs == rhs;
        }
        case EqFamily::Q2: {
            if (r.witness.size() != 2 || r.witness[1] == 0) return false;
            mpz_class mod = r.which_equation == 1 ? p1 : p1 * p2;
            mpz_class x(static_cast<long>(r.witness[0])), y(static_cast<long>(r.witness[1]));
            return x * x + mod * y * y == (mpz_class(1) << (r.m + 2));
        }
        case EqFamily::System: {
            if (r.witness.size() != 6) return false;
            mpz_class X(static_cast<long>(r.witness[0])), Y(static_cast<long>(r.witness[1]));
            mpz_class Z(static_cast<long>(r.witness[2])), W(static_cast<long>(r.witness[3]));
            mpz_class A(static_cast<long>(r.witness[4])), B(static_cast<long>(r.witness[5]));
            if (A * A + B * B != p2) return false;
            mpz_class e1 = p1 * p1 * X * X + p2 * Y * Y + 2 * p1 * p2 * (Z * Z + W * W);
            if (e1 != (mpz_class(1) << (r.m + 4))) return false;
            return X * Y + 2 * B * Z * W + A * (W * W - Z * Z) == 0;
        }
    }
    return false;
}

std::string family_name(EqFamily f) {
    switch (f) {
        case EqFamily::Q1: return "q1";
        case EqFamily::Q2: return "q2";
        case EqFamily::System: return "system";
    }
    return "?";
}

}  // namespace gbfv::dio
