#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gbfv/survey.hpp"

using namespace gbfv::survey;
using gbfv::nt::Family;

TEST_CASE("table rows at B = 200") {
    auto r1 = survey(Family::Thm1, 200);
    CHECK(r1.count_condition1 == 84);
    CHECK(r1.count_order == 51);
    CHECK(r1.r1() == "0.6071428571");

    auto r2 = survey(Family::Thm2, 200);
    CHECK(r2.count_condition1 == 58);
    CHECK(r2.count_order == 22);
    CHECK(r2.count_nonquartic == 34);
    CHECK(r2.r1() == "0.3793103448");
    CHECK(r2.r2() == "0.6470588235");

    auto r3 = survey(Family::Thm3, 200);
    CHECK(r3.count_condition1 == 51);
    CHECK(r3.count_order == 22);
    CHECK(r3.count_nonquartic == 29);
    CHECK(r3.r1() == "0.4313725490");
    CHECK(r3.r2() == "0.7586206897");
}

TEST_CASE("table rows at B = 2000") {
    auto r1 = survey(Family::Thm1, 2000);
    CHECK(r1.count_condition1 == 3061);
    CHECK(r1.count_order == 1280);
    CHECK(r1.r1() == "0.4181639987");

    auto r2 = survey(Family::Thm2, 2000);
    CHECK(r2.count_condition1 == 2767);
    CHECK(r2.count_order == 619);
    CHECK(r2.count_nonquartic == 1383);

    auto r3 = survey(Family::Thm3, 2000);
    CHECK(r3.count_condition1 == 2681);
    CHECK(r3.count_order == 553);
    CHECK(r3.count_nonquartic == 1330);
}

TEST_CASE("counts are monotone in the bound") {
    for (Family f : {Family::Thm1, Family::Thm2, Family::Thm3}) {
        auto a = survey(f, 200);
        auto b = survey(f, 500);
        auto c = survey(f, 2000);
        CHECK(a.count_condition1 <= b.count_condition1);
        CHECK(b.count_condition1 <= c.count_condition1);
        CHECK(a.count_order <= b.count_order);
        CHECK(b.count_order <= c.count_order);
    }
}

TEST_CASE("pair loop order and thread count do not change counts") {
    // reversed loop (p2 outer) recomputed from scratch with library predicates
    gbfv::nt::u64 first = 0, order = 0;
    for (gbfv::nt::u64 p2 = 3; p2 <= 200; p2 += 2) {
        if (!gbfv::nt::is_prime(p2) || p2 % 8 != 5) continue;
        for (gbfv::nt::u64 p1 = 3; p1 <= 200; p1 += 2) {
            if (!gbfv::nt::is_prime(p1) || p1 % 8 != 3 || p1 == 3511) continue;
            if (gbfv::nt::pair_condition1(p1, p2, Family::Thm1)) ++first;
            if (gbfv::nt::pair_qualifies(p1, p2, Family::Thm1)) ++order;
        }
    }
    auto row = survey(Family::Thm1, 200);
    CHECK(first == row.count_condition1);
    CHECK(order == row.count_order);

    auto threaded = survey(Family::Thm1, 2000, 4);
    auto serial = survey(Family::Thm1, 2000, 1);
    CHECK(threaded.count_condition1 == serial.count_condition1);
    CHECK(threaded.count_order == serial.count_order);
}

TEST_CASE("row invariants") {
    for (Family f : {Family::Thm2, Family::Thm3}) {
        auto r = survey(f, 1000);
        CHECK(r.count_order <= r.count_condition1);
        CHECK(r.count_order <= r.count_nonquartic);
        CHECK(r.count_nonquartic <= r.count_condition1);
    }
}

TEST_CASE("decimal ratio rendering rounds half-up to 10 places") {
    CHECK(ratio_decimal(51, 84) == "0.6071428571");
    CHECK(ratio_decimal(22, 29) == "0.7586206897");
    CHECK(ratio_decimal(1, 1) == "1.0000000000");
    CHECK(ratio_decimal(1, 3) == "0.3333333333");
    CHECK(ratio_decimal(2, 3) == "0.6666666667");
    CHECK(ratio_decimal(1, 2) == "0.5000000000");
}

TEST_CASE("CSV row format") {
    auto r = survey(Family::Thm1, 200);
    CHECK(to_csv(r) == "200,84,51,,0.6071428571,");
    CHECK(csv_header() == "B,first,order,nonquartic,r1,r2");
}

TEST_CASE("Artin constant") {
    auto e6 = artin_constant(1000000);
    const double known = 0.3739558136192022;  // prod_p (1 - 1/(p(p-1)))
    CHECK(e6.value - e6.tail_bound <= known);
    CHECK(known <= e6.value + e6.tail_bound);
    CHECK(e6.value >= 0.3739);
    CHECK(e6.value <= 0.3740);
    CHECK(std::round(2 * e6.value * 1000) / 1000 == doctest::Approx(0.748).epsilon(1e-12));

    auto e5 = artin_constant(100000);
    CHECK(e5.value >= e6.value);  // factors below 1
}

TEST_CASE("density delta(2,2,8,1) = A/4") {
    auto d = delta_density(100000);
    auto a = artin_constant(1000000);
    double diff = std::abs(d.value - a.value / 4);
    CHECK(diff <= d.tail_bound + a.tail_bound / 4);
    CHECK(diff <= 1e-4);
}

TEST_CASE("delta series: first term and sub-sum identity") {
    // independent accumulation of sum_{odd squarefree r <= 100} mu(r)/(8 r phi(r))
    long double sum = 0;
    for (int r = 1; r <= 100; r += 2) {
        int m = r, mu = 1;
        long phi = 1;
        bool sqfree = true;
        for (int p = 3; p * p <= m; p += 2) {
            if (m % p) continue;
            m /= p;
            if (m % p == 0) { sqfree = false; break; }
            mu = -mu;
            phi *= p - 1;
        }
        if (!sqfree) continue;
        if (m > 1) { mu = -mu; phi *= m - 1; }
        sum += static_cast<long double>(mu) / (8.0L * r * phi);
    }
    auto d = delta_density(100);
    CHECK(d.value == doctest::Approx(static_cast<double>(sum)).epsilon(1e-14));
    // first term r = 1 dominates: removing it leaves the tail of the series
    CHECK(std::abs(d.value - 0.125) < 0.04);
    // sum mu/(4 r phi) - sum mu/(8 r phi) = sum mu/(8 r phi)
    CHECK(2 * static_cast<double>(sum) - static_cast<double>(sum) ==
          doctest::Approx(static_cast<double>(sum)));
}
