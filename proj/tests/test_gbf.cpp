#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gbfv/gbf.hpp"

using namespace gbfv::gbf;
namespace cy = gbfv::cyclo;

namespace {

ModFunction random_function(long q, std::mt19937_64& rng) {
    std::vector<long> v(q);
    for (auto& x : v) x = static_cast<long>(rng() % q);
    return make_function(q, std::move(v));
}

}  // namespace

TEST_CASE("spectrum of the zero function at q = 6") {
    auto f = parse_function(6, "zero");
    auto spec = fourier_spectrum(f);
    REQUIRE(spec.size() == 6);
    CHECK(spec[0] == cy::CycInt::constant(3, 6));
    for (int lam = 1; lam < 6; ++lam) CHECK(spec[lam].is_zero());
    CHECK_FALSE(is_gbf(f));
}

TEST_CASE("flat spectra at odd moduli") {
    CHECK(is_gbf(parse_function(3, "square")));
    auto f5 = make_function(5, {0, 2, 3, 3, 2});  // 2x^2 mod 5
    CHECK(is_gbf(f5));
}

TEST_CASE("Parseval at q = 6") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto f = random_function(6, rng);
        cy::CycInt sum = cy::CycInt::zero(3);
        for (const auto& a : fourier_spectrum(f)) sum = sum + a * a.conj();
        CHECK(sum == cy::CycInt::constant(3, 36));
    }
}

TEST_CASE("spectrum orthogonality on found flat functions") {
    for (long q : {3L, 5L}) {
        auto f = exhaustive_search(q);
        REQUIRE(f.has_value());
        auto spec = fourier_spectrum(*f);
        long conductor = spectrum_conductor(q);
        for (long v = 1; v < q; ++v) {
            cy::CycInt sum = cy::CycInt::zero(conductor);
            for (long lam = 0; lam < q; ++lam) sum = sum + spec[lam] * spec[(lam + v) % q].conj();
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("constant shifts scale the spectrum by a root of unity") {
    std::mt19937_64 rng(12);
    auto f = random_function(6, rng);
    for (long c : {1L, 2L, 5L}) {
        ModFunction g = f;
        for (auto& v : g.values) v = ((v - c) % 6 + 6) % 6;
        auto sf = fourier_spectrum(f);
        auto sg = fourier_spectrum(g);
        // zeta_6^-c at conductor 3
        cy::CycInt w = cy::zeta2N_pow(3, (6 - c) % 6);
        for (long lam = 0; lam < 6; ++lam) CHECK(sg[lam] == sf[lam] * w);
    }
}

TEST_CASE("exhaustive search results") {
    CHECK_FALSE(exhaustive_search(2).has_value());
    auto f3 = exhaustive_search(3);
    REQUIRE(f3.has_value());
    CHECK(f3->values == std::vector<long>{0, 0, 1});
    CHECK(is_gbf(*f3));
    CHECK_FALSE(exhaustive_search(6).has_value());
    CHECK_THROWS_AS(exhaustive_search(7), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_search(4), std::invalid_argument);
}

TEST_CASE("parallel search finds the same first witness") {
    auto a = exhaustive_search(5, 1);
    auto b = exhaustive_search(5, 4);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->values == b->values);
}

TEST_CASE("unsupported moduli") {
    CHECK_THROWS_AS(fourier_spectrum(parse_function(8, "zero")), std::invalid_argument);
    CHECK_THROWS_AS(spectrum_conductor(12), std::invalid_argument);
}

TEST_CASE("q = 42 family membership is vacuous for non-flat functions") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 3; ++i) {
        auto f = random_function(42, rng);
        CHECK(spectrum_in_family_42(f));
    }
    CHECK(spectrum_in_family_42(parse_function(42, "zero")));
}

TEST_CASE("function parsing") {
    auto f = parse_function(6, "1,2,3,4,5,6");
    CHECK(f.values == std::vector<long>{1, 2, 3, 4, 5, 0});
    CHECK(parse_function(5, "identity").values == std::vector<long>{0, 1, 2, 3, 4});
    CHECK(parse_function(5, "const=7").values == std::vector<long>{2, 2, 2, 2, 2});
    CHECK_THROWS_AS(parse_function(4, "0,1,2"), std::invalid_argument);
}
