#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "gbfv/cyclotomic.hpp"
#include "gbfv/numtheory.hpp"

using namespace gbfv::cyclo;

namespace {

CycInt beta21() {
    std::vector<BigInt> c(12);
    c[2] = 1;
    c[5] = 1;
    c[7] = -1;
    c[9] = 1;
    return CycInt::reduce(21, std::move(c));
}

CycInt random_int_element(long N, std::mt19937_64& rng, int amp = 5) {
    std::vector<BigInt> c(gbfv::nt::euler_phi(N));
    for (auto& x : c) x = static_cast<long>(rng() % (2 * amp + 1)) - amp;
    return CycInt::reduce(N, std::move(c));
}

CycRat random_rat_element(long N, std::mt19937_64& rng) {
    std::vector<BigRat> c(gbfv::nt::euler_phi(N));
    for (auto& x : c) {
        x = BigRat(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6));
        x.canonicalize();
    }
    return CycRat::reduce(N, std::move(c));
}

}  // namespace

TEST_CASE("reduce: canonical form and idempotence") {
    std::vector<BigInt> x21(22);
    x21[21] = 1;  // z^21
    CHECK(CycInt::reduce(21, x21) == CycInt::one(21));

    std::vector<BigInt> x12(13);
    x12[12] = 1;
    CycInt r = CycInt::reduce(21, x12);
    CHECK(r.degree() == 12);
    CHECK(CycInt::reduce(21, std::vector<BigInt>(r.coeffs())) == r);

    CHECK_THROWS_AS(CycInt::zero(4), std::invalid_argument);
    CHECK_THROWS_AS(CycInt::zero(1), std::invalid_argument);
}

TEST_CASE("(1-z)(1-z^-1) = (-z^-1)(1-z)^2 at N = 21") {
    CycInt one = CycInt::one(21);
    CycInt z = CycInt::zeta_pow(21, 1);
    CycInt zi = CycInt::zeta_pow(21, 20);
    CHECK((one - z) * (one - zi) == -zi * (one - z) * (one - z));
}

TEST_CASE("ring operations") {
    CHECK(CycInt::zeta_pow(21, 1) * CycInt::zeta_pow(21, 20) == CycInt::one(21));
    CycInt b = beta21();
    CHECK(absolute_norm(b * b.conj()) == 49);
    std::mt19937_64 rng(3);
    CycInt x = random_int_element(21, rng);
    CHECK((x + (-x)).is_zero());
    CHECK_THROWS_AS(x + CycInt::one(9), std::invalid_argument);
}

TEST_CASE("conjugation") {
    CHECK(CycInt::zeta_pow(21, 1).conj() == CycInt::zeta_pow(21, 20));
    CycInt g5 = gauss_sum(5, 5);
    CHECK(g5.conj() == g5);  // real element
    CycInt b = beta21();
    CHECK(b.conj().conj() == b);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        CycInt x = random_int_element(63, rng);
        CHECK(x.conj().conj() == x);
    }
}

TEST_CASE("Galois action") {
    std::mt19937_64 rng(5);
    CycInt x = random_int_element(21, rng);
    CHECK(x.galois(1) == x);
    CHECK(x.galois(20) == x.conj());
    CHECK(x.galois(2).galois(4) == x.galois(8));
    CHECK(x.galois(5).galois(17) == x.galois(5 * 17 % 21));
    CHECK(CycInt::zeta_pow(21, 1).galois(2) == CycInt::zeta_pow(21, 2));
    CHECK_THROWS_AS(x.galois(7), std::invalid_argument);

    CycInt g7 = gauss_sum(7, 7);
    CHECK(g7.galois(2) == g7 * BigInt(gbfv::nt::jacobi(2, 7)));
    CHECK(g7.galois(3) == g7 * BigInt(gbfv::nt::jacobi(3, 7)));
}

TEST_CASE("zeta_{2N} powers at the principal root") {
    CHECK(zeta2N_pow(21, 2) == CycInt::zeta_pow(21, 1));
    CHECK(zeta2N_pow(21, 21) == CycInt::constant(21, -1));
    CHECK(zeta2N_pow(21, 5) == -CycInt::zeta_pow(21, 13));  // 5*11 = 13 mod 21
    CHECK(zeta2N_pow(21, 0) == CycInt::one(21));
    CHECK(zeta2N_pow(21, 42) == CycInt::one(21));
}

TEST_CASE("embedding into a larger conductor") {
    CHECK(CycInt::zeta_pow(21, 1).embed(63) == CycInt::zeta_pow(63, 3));
    CHECK(CycInt::one(21).embed(63) == CycInt::one(63));
    CycInt b = beta21();
    CHECK(absolute_norm(b.embed(63)) == 343);  // 7^[Q(z63):Q(z21)]
    CHECK_THROWS_AS(b.embed(35), std::invalid_argument);

    std::mt19937_64 rng(6);
    CycInt x = random_int_element(21, rng, 3), y = random_int_element(21, rng, 3);
    CHECK((x * y).embed(63) == x.embed(63) * y.embed(63));
    CHECK((x + y).embed(63) == x.embed(63) + y.embed(63));
}

TEST_CASE("norms: pinned values and the two routes") {
    CycInt b = beta21();
    CHECK(absolute_norm(b) == 7);
    CHECK(absolute_norm(CycInt::zeta_pow(21, 5)) == 1);
    CycInt e7 = CycInt::one(7) - CycInt::zeta_pow(7, 1);
    CHECK(absolute_norm(e7) == 7);  // Phi_7(1)
    CHECK(absolute_norm_resultant(to_rational(e7)) == 7);

    std::mt19937_64 rng(7);
    for (long N : {7L, 9L, 21L}) {
        for (int i = 0; i < 100; ++i) {
            CycRat x = random_rat_element(N, rng);
            CHECK(absolute_norm(x) == absolute_norm_resultant(x));
        }
        for (int i = 0; i < 30; ++i) {
            CycInt x = random_int_element(N, rng, 3), y = random_int_element(N, rng, 3);
            CHECK(absolute_norm(x * y) == absolute_norm(x) * absolute_norm(y));
        }
    }
}

TEST_CASE("inverse via conjugate products") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 10; ++i) {
        CycRat x = random_rat_element(21, rng);
        if (x.is_zero()) continue;
        CHECK(x * inverse(x) == CycRat::one(21));
    }
    CHECK_THROWS_AS(inverse(CycRat::zero(21)), std::domain_error);
}

TEST_CASE("integer divisibility on the power basis") {
    CycInt b = beta21();
    CycInt w5 = -CycInt::zeta_pow(21, 5);  // (-z)^5
    CHECK(int_divisible(b.pow(3) + b.conj().pow(3) * w5, 2));
    CycInt b63 = b.embed(63);
    CycInt w63 = -CycInt::zeta_pow(63, 5);
    CHECK_FALSE(int_divisible(b63 + b63.conj() * w63, 2));

    std::mt19937_64 rng(9);
    CycInt x = random_int_element(21, rng);
    CHECK(int_divisible(x * BigInt(6), 6));
    CHECK(congruent_mod(x * BigInt(7) + CycInt::one(21), CycInt::one(21), 7));
    CHECK_THROWS_AS(int_divisible(x, 0), std::invalid_argument);

    // divisibility is Galois-stable: (k) is a Galois-stable ideal
    for (long a : {2L, 4L, 5L, 20L}) {
        CycInt y = x * BigInt(3);
        CHECK(int_divisible(y, 3) == int_divisible(y.galois(a), 3));
        CHECK(int_divisible(x, 2) == int_divisible(x.galois(a), 2));
    }
}

TEST_CASE("Gauss sums") {
    CycInt g3 = gauss_sum(3, 21);
    std::vector<BigInt> expect(12);
    expect[0] = 1;
    expect[7] = 2;
    CHECK(g3 == CycInt::reduce(21, expect));
    CHECK(g3 * g3 == CycInt::constant(21, -3));

    CycInt g7 = gauss_sum(7, 21);
    CHECK(g7 * g7 == CycInt::constant(21, -7));
    // z^3 + z^6 - z^9 + z^12 - z^15 - z^18 reduced to the power basis
    std::vector<BigInt> raw(19);
    raw[3] = 1; raw[6] = 1; raw[9] = -1; raw[12] = 1; raw[15] = -1; raw[18] = -1;
    CHECK(g7 == CycInt::reduce(21, raw));

    CHECK(gauss_sum(5, 5) * gauss_sum(5, 5) == CycInt::constant(5, 5));
    CHECK_THROWS_AS(gauss_sum(5, 21), std::invalid_argument);
    for (long p : {3L, 5L, 7L})
        CHECK(gauss_sum(p, 105).pow(2) ==
              CycInt::constant(105, (p % 4 == 1 ? BigInt(p) : BigInt(-p))));
}

TEST_CASE("omega") {
    CHECK(omega(7) == gauss_sum(7, 7));
    CHECK(omega(7) * omega(7).conj() == CycInt::constant(7, 7));
    CHECK(omega(9) == CycInt::constant(9, -3));
    CHECK(omega(15) * omega(15).conj() == CycInt::constant(15, 15));
    CHECK_THROWS_WITH_AS(omega(21), doctest::Contains("7"), std::invalid_argument);
}

TEST_CASE("units") {
    CHECK(is_unit(CycInt::one(21) - CycInt::zeta_pow(21, 1)));
    CHECK_FALSE(is_unit(CycInt::constant(21, 2)));
    std::vector<BigInt> vc = {3, -6, 4, 6, -18, 22, -12, -3, 13, -12, 6, -1};
    CHECK(is_unit(CycInt::reduce(21, vc)));
}

TEST_CASE("text round trip") {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 40; ++i) {
        CycRat x = random_rat_element(21, rng);
        CHECK(parse_cyc_rat(to_string(x)) == x);
        CycInt y = random_int_element(63, rng);
        CHECK(parse_cyc_int(to_string(y)) == y);
    }
    CHECK(to_string(CycInt::zero(21)) == "z21: 0");
    CHECK(parse_cyc_rat("z21: 0") == CycRat::zero(21));
    CHECK(parse_cyc_rat("z21: 1/2 + 3/2*z^2") ==
          CycRat::reduce(21, {BigRat(1, 2), BigRat(0), BigRat(3, 2)}));
    CHECK_THROWS_AS(parse_cyc_int("z21: 1/2"), std::invalid_argument);
}

TEST_CASE("concurrent construction at a fresh conductor") {
    std::vector<std::thread> pool;
    std::vector<CycInt> results(8);
    for (int i = 0; i < 8; ++i)
        pool.emplace_back([&, i] { results[i] = CycInt::zeta_pow(33, i + 1) * CycInt::zeta_pow(33, 33 - i - 1); });
    for (auto& t : pool) t.join();
    for (const auto& r : results) CHECK(r == CycInt::one(33));
}
