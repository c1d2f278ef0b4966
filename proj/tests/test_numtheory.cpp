#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gbfv/numtheory.hpp"
#include "oracles.hpp"

using namespace gbfv::nt;

TEST_CASE("mult_order on pinned inputs") {
    CHECK(mult_order(2, 9) == 6);
    CHECK(mult_order(2, 63) == 6);
    CHECK(mult_order(7, 9) == 3);
    CHECK(mult_order(3, 7) == 6);
    CHECK(mult_order(2, 7) == 3);
    CHECK_THROWS_AS(mult_order(6, 9), std::invalid_argument);
}

TEST_CASE("mult_order is the least exponent (random)") {
    std::mt19937_64 rng(7);
    int tested = 0;
    while (tested < 1000) {
        u64 n = 2 + rng() % 5000;
        u64 a = 1 + rng() % (n - 1);
        if (std::gcd(a, n) != 1) continue;
        ++tested;
        u64 t = mult_order(a, n);
        CHECK(powmod(a, t, n) == 1);
        for (auto [q, e] : factorize(t)) CHECK(powmod(a, t / q, n) != 1);
    }
}

TEST_CASE("self-conjugacy on pinned inputs") {
    CHECK(is_self_conjugate(3, 63));
    CHECK_FALSE(is_self_conjugate(7, 21));
    CHECK_FALSE(is_self_conjugate(7, 63));
    CHECK(is_self_conjugate(7, 49));
    CHECK(is_self_conjugate(3, 27));
    CHECK(is_self_conjugate(5, 5));
    CHECK(is_self_conjugate(2, 9));       // 2^1 = -1 mod 3... ord(2,9)=6, 2^3=8=-1
    CHECK_FALSE(is_self_conjugate(2, 21));
}

TEST_CASE("self-conjugacy agrees with the bounded scan for N <= 500") {
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
        for (u64 N = 2; N <= 500; ++N)
            CHECK(is_self_conjugate(p, N) == oracles::self_conjugate_scan(p, N));
}

TEST_CASE("splitting parameters") {
    auto s = splitting_params(7, 21);
    CHECK(s.e == 6);
    CHECK(s.f == 1);
    CHECK(s.g == 2);
    s = splitting_params(2, 63);
    CHECK(s.e == 1);
    CHECK(s.f == 6);
    CHECK(s.g == 6);
    s = splitting_params(3, 21);
    CHECK(s.e == 2);
    CHECK(s.f == 6);
    CHECK(s.g == 1);
}

TEST_CASE("e*f*g = phi(N) across a range") {
    for (u64 N = 3; N <= 315; N += 2)
        for (u64 p : {2, 3, 5, 7, 11, 13}) {
            auto s = splitting_params(p, N);
            CHECK(s.e * s.f * s.g == euler_phi(N));
        }
}

TEST_CASE("residue profiles") {
    auto r = residue_tests(1093);
    CHECK(r.wieferich);
    r = residue_tests(3511);
    CHECK(r.wieferich);
    CHECK(r.two_near_primitive);
    r = residue_tests(17);
    REQUIRE(r.two_quartic_residue.has_value());
    CHECK_FALSE(*r.two_quartic_residue);  // 2^4 = 16 = -1 mod 17
    r = residue_tests(7);
    CHECK(r.two_near_primitive);
    CHECK_FALSE(r.two_quartic_residue.has_value());  // 7 != 1 mod 8
    r = residue_tests(73);
    REQUIRE(r.two_quartic_residue.has_value());
    CHECK(*r.two_quartic_residue);  // ord_73(2) = 9 divides (73-1)/4 = 18
}

TEST_CASE("pair qualification on the worked example pairs") {
    for (auto [p1, p2] : {std::pair<u64, u64>{67, 5}, {83, 5}, {11, 13}, {59, 13}, {59, 37}, {19, 53}})
        CHECK(pair_qualifies(p1, p2, Family::Thm1));
    for (auto [p1, p2] : {std::pair<u64, u64>{23, 17}, {23, 97}, {47, 41}, {71, 17}, {79, 17}, {79, 41}})
        CHECK(pair_qualifies(p1, p2, Family::Thm2));
    for (auto [p1, p2] : {std::pair<u64, u64>{3, 17}, {3, 41}, {11, 17}, {19, 41}, {107, 17}})
        CHECK(pair_qualifies(p1, p2, Family::Thm3));
    // the two scattered-result pairs meet condition 1 but not the order bound
    for (auto [p1, p2] : {std::pair<u64, u64>{11, 41}, {19, 97}}) {
        CHECK(pair_condition1(p1, p2, Family::Thm3));
        CHECK_FALSE(pair_qualifies(p1, p2, Family::Thm3));
    }
    // condition 1 holds but the order condition fails
    CHECK(pair_condition1(67, 13, Family::Thm1));
    CHECK_FALSE(pair_qualifies(67, 13, Family::Thm1));
    CHECK(pair_condition1(19, 13, Family::Thm1));
    CHECK_FALSE(pair_qualifies(19, 13, Family::Thm1));
    // wrong residue classes
    CHECK_FALSE(pair_condition1(5, 67, Family::Thm1));
}

TEST_CASE("Thm1 qualification implies both primes self-conjugate") {
    for (u64 p1 = 3; p1 <= 200; p1 += 2) {
        if (!is_prime(p1) || p1 % 8 != 3) continue;
        for (u64 p2 = 3; p2 <= 200; p2 += 2) {
            if (!is_prime(p2) || p2 % 8 != 5) continue;
            if (!pair_qualifies(p1, p2, Family::Thm1)) continue;
            CHECK(is_self_conjugate(p1, p1 * p2));
            CHECK(is_self_conjugate(p2, p1 * p2));
        }
    }
}

TEST_CASE("pair record fields are consistent") {
    auto rec = make_pair_record(23, 17);
    CHECK(rec.class1 == 7);
    CHECK(rec.class2 == 1);
    CHECK(rec.legendre_p1_p2 == -1);
    CHECK(rec.ord2_p1p2 == lcm(rec.ord2_p1, rec.ord2_p2));
    CHECK(rec.qualifies_thm2);
    CHECK_FALSE(rec.qualifies_thm1);
}

TEST_CASE("descent conductor F(m, n)") {
    CHECK(schmidt_F(3 * 7, 2 * 7) == 21);
    CHECK(schmidt_F(9 * 7, 2 * 7) == 63);
    CHECK(schmidt_F(9 * 343, 2 * 343) == 63);
    CHECK(schmidt_F(27 * 49, 2 * 49) == 63);
    for (u64 m : {21ull, 63ull, 147ull, 441ull, 1323ull}) {
        u64 F = schmidt_F(m, 2 * 7);
        CHECK(F % radical(m) == 0);
        CHECK(m % F == 0);
    }
}

TEST_CASE("cyclotomic polynomials") {
    auto p1 = cyclotomic_poly(1);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0] == -1);
    CHECK(p1[1] == 1);
    auto p9 = cyclotomic_poly(9);
    REQUIRE(p9.size() == 7);
    CHECK(p9[0] == 1);
    CHECK(p9[3] == 1);
    CHECK(p9[6] == 1);
    CHECK(p9[1] == 0);
    CHECK(cyclotomic_poly(21).size() == 13);  // degree phi(21) = 12

    // prod over d | N of Phi_d = x^N - 1
    for (u64 N = 1; N <= 30; ++N) {
        std::vector<mpz_class> prod = {1};
        for (u64 d = 1; d <= N; ++d) {
            if (N % d != 0) continue;
            auto f = cyclotomic_poly(d);
            std::vector<mpz_class> next(prod.size() + f.size() - 1);
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += prod[i] * f[j];
            prod = std::move(next);
        }
        REQUIRE(prod.size() == N + 1);
        CHECK(prod[0] == -1);
        CHECK(prod[N] == 1);
        for (u64 k = 1; k < N; ++k) CHECK(prod[k] == 0);
    }
}

TEST_CASE("jacobi symbol basics") {
    CHECK(jacobi(2, 7) == 1);
    CHECK(jacobi(3, 7) == -1);
    CHECK(jacobi(67, 5) == (67 % 5 == 4 ? 1 : -1));
    CHECK(jacobi(21, 21) == 0);
    CHECK_THROWS_AS(jacobi(1, 4), std::invalid_argument);
}
