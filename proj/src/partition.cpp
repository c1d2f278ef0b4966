#include "gbfv/partition.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "gbfv/numtheory.hpp"

namespace gbfv::part {

namespace {

constexpr int kMinCBound = 64;

CycInt make_beta() {
    std::vector<BigInt> c(12);
    c[2] = 1;
    c[5] = 1;
    c[7] = -1;
    c[9] = 1;
    return CycInt::reduce(21, std::move(c));
}

CycInt make_v() {
    // v = 3 - 6 z + 4 z^2 + 6 z^3 - 18 z^4 + 22 z^5 - 12 z^6 - 3 z^7
    //     + 13 z^8 - 12 z^9 + 6 z^10 - z^11
    std::vector<BigInt> c = {3, -6, 4, 6, -18, 22, -12, -3, 13, -12, 6, -1};
    return CycInt::reduce(21, std::move(c));
}

}  // namespace

CycInt root_of_unity(long N, long j) {
    long jm = j % (2 * N);
    if (jm < 0) jm += 2 * N;
    CycInt z = CycInt::zeta_pow(N, jm % N);
    return (jm % 2) ? -z : z;
}

const Constants21& constants_21() {
    static const Constants21 k = [] {
        Constants21 c;
        c.beta = make_beta();
        c.sqrt_m3 = cyclo::gauss_sum(3, 21);
        c.sqrt_m7 = cyclo::gauss_sum(7, 21);
        CycInt one = CycInt::one(21);
        auto half = [&](const CycInt& s) {
            CycRat h = cyclo::to_rational(one + s) * BigRat(1, 2);
            auto hi = cyclo::to_integral(h);
            if (!hi) throw std::logic_error("(1 +- sqrt(-7))/2 must be integral");
            return *hi;
        };
        c.half_plus = half(c.sqrt_m7);
        c.half_minus = half(-c.sqrt_m7);
        c.v = make_v();
        CycRat bb6 = cyclo::to_rational((c.beta * c.beta.conj()).pow(6));
        c.u = cyclo::inverse(bb6) * BigRat(7);
        CycRat b3inv = cyclo::inverse(cyclo::to_rational(c.beta.pow(3)));
        c.x1 = b3inv * cyclo::to_rational(c.beta.conj().pow(3) * root_of_unity(21, 5));
        return c;
    }();
    return k;
}

std::vector<CheckResult> verify_foundation_21() {
    const auto& k = constants_21();
    std::vector<CheckResult> out;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        out.push_back({name, ok, detail});
    };

    BigInt nb = cyclo::absolute_norm(k.beta);
    add("norm_beta_is_7", nb == 7, "N(" + cyclo::to_string(k.beta) + ") = " + nb.get_str());

    auto u_int = cyclo::to_integral(k.u);
    bool u_ok = u_int.has_value();
    bool u_unit = u_ok && cyclo::is_unit(*u_int);
    CycRat prod = cyclo::to_rational((k.beta * k.beta.conj()).pow(6)) * k.u;
    bool u_eq = prod == CycRat::constant(21, BigRat(7));
    add("u_is_integral_unit_with_bb6_u_eq_7", u_ok && u_unit && u_eq,
        "u = " + cyclo::to_string(k.u));

    bool vv = cyclo::to_rational(k.v * k.v.conj()) == k.u;
    add("v_times_conj_v_equals_u", vv, "v = " + cyclo::to_string(k.v));

    CycRat v2 = cyclo::to_rational(k.v * k.v);
    CycRat target = k.u * cyclo::to_rational(-CycInt::zeta_pow(21, 1));
    add("v_squared_equals_u_times_minus_zeta", v2 == target,
        "v^2 = " + cyclo::to_string(v2));

    bool g3 = k.sqrt_m3 * k.sqrt_m3 == CycInt::constant(21, -3);
    bool g7 = k.sqrt_m7 * k.sqrt_m7 == CycInt::constant(21, -7);
    add("gauss_sum_squares_are_m3_and_m7", g3 && g7,
        "sqrt(-3) = " + cyclo::to_string(k.sqrt_m3) + "; sqrt(-7) = " + cyclo::to_string(k.sqrt_m7));

    return out;
}

std::set<std::pair<int, long>> scan_divisibility(long conductor, int l_max, long j_count,
                                                 int threads) {
    if (conductor < 21 || conductor % 21 != 0 || conductor % 2 == 0)
        throw std::invalid_argument("scan: conductor must be an odd multiple of 21");
    if (l_max < 1 || j_count < 1) throw std::invalid_argument("scan: empty range");
    const CycInt beta = constants_21().beta.embed(conductor);
    const CycInt beta_c = beta.conj();
    const BigInt two = 2;

    std::set<std::pair<int, long>> found;
    std::mutex found_mutex;
    auto scan_l = [&](int l) {
        CycInt bl = beta.pow(l);
        CycInt cl = beta_c.pow(l);
        for (long j = 0; j < j_count; ++j) {
            if (cyclo::int_divisible(bl + cl * root_of_unity(conductor, j), two)) {
                std::lock_guard<std::mutex> lock(found_mutex);
                found.insert({l, j});
            }
        }
    };
    if (threads <= 1) {
        for (int l = 1; l <= l_max; ++l) scan_l(l);
    } else {
        std::vector<std::thread> pool;
        std::atomic_int next{1};
        for (int t = 0; t < std::min(threads, l_max); ++t)
            pool.emplace_back([&] {
                for (int l = next.fetch_add(1); l <= l_max; l = next.fetch_add(1)) scan_l(l);
            });
        for (auto& th : pool) th.join();
    }
    return found;
}

NonDivisibility63 verify_nondivisibility_63(long t) {
    const CycInt beta = constants_21().beta.embed(63);
    CycInt e = beta + beta.conj() * root_of_unity(63, t);
    NonDivisibility63 r;
    r.divisible = cyclo::int_divisible(e, 2);
    r.parity.reserve(e.degree());
    for (const auto& c : e.coeffs()) {
        BigInt m = c % 2;
        r.parity.push_back(m == 0 ? 0 : 1);
    }
    return r;
}

bool solution_family_check(int a, int b, const std::vector<FamilySample>& samples) {
    if (a < 1 || b < 1) throw std::invalid_argument("family check: a, b must be positive");
    long N = 1;
    for (int i = 0; i < a; ++i) N *= 3;
    for (int i = 0; i < b; ++i) N *= 7;
    const auto& k = constants_21();
    const CycInt beta = k.beta.embed(N);
    const CycInt beta_c = beta.conj();
    const CycInt sqrt_m3_a = k.sqrt_m3.embed(N).pow(a);
    const CycInt vb = k.v.embed(N).pow(b);
    const CycInt twoN = CycInt::constant(N, BigInt(2 * N));
    for (const auto& s : samples) {
        if (s.l < 0 || s.l > 6 * b) throw std::invalid_argument("family check: l out of [0, 6b]");
        const CycInt& half = s.sign >= 0 ? k.half_plus : k.half_minus;
        CycInt x = half.embed(N) * sqrt_m3_a * beta.pow(s.l) * beta_c.pow(6 * b - s.l) * vb *
                   root_of_unity(N, s.j);
        if (x * x.conj() != twoN) return false;
    }
    return true;
}

PowerSum power_sum_x1(unsigned i) {
    const auto& k = constants_21();
    CycRat xi = k.x1.pow(i);
    PowerSum p;
    p.value = xi + xi.conj();
    p.constant_term = p.value.constant_term();
    return p;
}

namespace {

bool is_two_mod_four(const CycRat& e) {
    for (std::size_t k = 0; k < e.degree(); ++k) {
        const BigRat& q = e.coeff(k);
        if (q.get_den() != 1) return false;
        BigInt m = q.get_num() % 4;
        if (m < 0) m += 4;
        if (k == 0 ? m != 2 : m != 0) return false;
    }
    return true;
}

}  // namespace

int min_c_mod4(unsigned i) {
    if (i < 1) throw std::invalid_argument("min_c_mod4: i must be >= 1");
    PowerSum p = power_sum_x1(i);
    BigRat seven = 7;
    CycRat scaled = p.value;
    for (int c = 1; c <= kMinCBound; ++c) {
        scaled = scaled * seven;
        if (is_two_mod_four(scaled)) {
            if (!is_two_mod_four(scaled * seven))
                throw std::logic_error("min_c_mod4: congruence is not monotone at c+1");
            return c;
        }
    }
    throw std::domain_error("min_c_mod4: no exponent <= 64 works; certificate invalid");
}

namespace {

// Reference mod-2 coordinate vectors for beta + conj(beta) * w^t at
// conductor 63, recorded from an independent computation in a reduced
// integral basis (positions are 1-indexed and basis-dependent; only the
// divisibility verdict is binding).
const std::vector<std::pair<long, std::vector<int>>> kReferenceParity63 = {
    {5, {2, 7, 9, 12, 27, 28, 29, 34}},
    {47, {2, 7, 9, 12, 25, 26, 27, 32, 33, 35, 36}},
    {89, {2, 7, 9, 12, 25, 26, 28, 29, 32, 33, 34, 35, 36}},
};

long pow_long(long base, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

PartitionCertificate contradiction_certificate(int a, int b, bool strict_table4, bool allow_large,
                                               int threads) {
    if (a < 1 || b < 1) throw std::invalid_argument("certificate: a, b must be positive");
    PartitionCertificate cert;
    cert.a = a;
    cert.b = b;
    cert.N = pow_long(3, a) * pow_long(7, b);
    long phiN = 2 * pow_long(3, a - 1) * 6 * pow_long(7, b - 1);
    if (phiN > 2000 && !allow_large)
        throw std::invalid_argument("certificate: phi(N) > 2000; pass allow_large to force");

    auto fail = [&](const std::string& step) {
        cert.conclusion = Conclusion::Inconclusive;
        cert.failed_step = step;
        return cert;
    };

    cert.foundation_checks = verify_foundation_21();

    // Base cases of the divisibility classification.
    cert.scan_t1 = scan_divisibility(21, 6, 21, threads);
    bool scan_ok = cert.scan_t1 == std::set<std::pair<int, long>>{{3, 5}, {6, 10}};
    cert.foundation_checks.push_back(
        {"scan_21_equals_{(3,5),(6,10)}", scan_ok, "conductor 21, l <= 6, j < 21"});

    if (a == 1) {
        // l = 1 would force 3 | 5 * 7^(b-1), impossible.
        long r = (5 * pow_long(7, b - 1)) % 3;
        cert.foundation_checks.push_back(
            {"l1_congruence_excluded_mod_3", r != 0,
             "5*7^(b-1) mod 3 = " + std::to_string(r)});
    } else {
        for (long t : {5L, 47L, 89L}) {
            auto nd = verify_nondivisibility_63(t);
            cert.foundation_checks.push_back(
                {"nondivisibility_63_t" + std::to_string(t), !nd.divisible,
                 "2 does not divide beta + conj(beta)*w^" + std::to_string(t)});
        }
        cert.scan_63 = {};
        for (const auto& lj : scan_divisibility(63, 6, 126, threads)) cert.scan_63.push_back(lj);
        std::vector<std::pair<int, long>> expected_63 = {{3, 15}, {3, 78}, {6, 30}, {6, 93}};
        cert.foundation_checks.push_back({"scan_63_matches_classification",
                                          cert.scan_63 == expected_63,
                                          "conductor 63, l <= 6, j < 126"});
    }
    if (strict_table4) {
        for (const auto& [t, ref] : kReferenceParity63) {
            auto nd = verify_nondivisibility_63(t);
            Table4Comparison cmp;
            cmp.t = t;
            cmp.verdict_not_divisible = !nd.divisible;
            for (std::size_t k = 0; k < nd.parity.size(); ++k)
                if (nd.parity[k]) cmp.computed_positions.push_back(static_cast<int>(k) + 1);
            cmp.reference_positions = ref;
            cmp.positions_match = cmp.computed_positions == cmp.reference_positions;
            cert.table4.push_back(std::move(cmp));
        }
    }

    // Two concrete members of the solution family at the actual conductor.
    bool fam = solution_family_check(
        a, b, {{+1, 3 * std::min(b, 2), 0}, {-1, 0, 5}});
    cert.foundation_checks.push_back(
        {"solution_family_xxbar_2N", fam, "x*conj(x) = " + std::to_string(2 * cert.N)});

    for (const auto& ch : cert.foundation_checks)
        if (!ch.ok) return fail("foundation:" + ch.name);

    cert.possible_ratio_set_size = 8 * b + 2;

    // C = max over i <= 2b of min_c_mod4(i); monotone, so 7^C works for all i.
    std::vector<int> cs;
    for (int i = 1; i <= 2 * b; ++i) {
        try {
            cs.push_back(min_c_mod4(static_cast<unsigned>(i)));
        } catch (const std::exception&) {
            return fail("min_c_mod4:i=" + std::to_string(i));
        }
    }
    cert.c_exponent = *std::max_element(cs.begin(), cs.end());

    // Constant coefficient of 7^C x (Fourier inner-product relation):
    //   4N*7^C (b1 - b2) + sum_i 2N*c_i (b_{2i+1} - b_{2i+2}) = 0,
    // with c_i the constant coordinate of 7^C (x1^i + x1^(-i)).
    BigInt sevenC = 1;
    for (int i = 0; i < cert.c_exponent; ++i) sevenC *= 7;
    std::vector<BigInt> raw;
    raw.push_back(BigInt(4 * cert.N) * sevenC);
    raw.push_back(-raw[0]);
    for (int i = 1; i <= 2 * b; ++i) {
        PowerSum p = power_sum_x1(static_cast<unsigned>(i));
        BigRat scaled = p.constant_term * BigRat(sevenC);
        if (scaled.get_den() != 1) return fail("power_sum_constant_not_integral:i=" + std::to_string(i));
        BigInt ci = scaled.get_num();
        cert.power_sum_constants.push_back(ci.get_str());
        BigInt m = ci % 4;
        if (m < 0) m += 4;
        if (m != 2) return fail("constant_not_2_mod_4:i=" + std::to_string(i));
        raw.push_back(BigInt(2 * cert.N) * ci);
        raw.push_back(-raw.back());
    }
    // Leading coefficient 4N*7^C = 4*odd and every pair coefficient
    // 2N*(4n+2) = 4*odd: dividing by 4 leaves odd coefficients only.
    BigInt g = 0;
    for (const auto& x : raw) g = ::gcd(g, x);
    if (g % 4 != 0) return fail("relation_not_divisible_by_4");
    std::vector<BigInt> prim;
    for (const auto& x : raw) prim.push_back(x / g);
    for (const auto& x : prim)
        if (x % 2 == 0) return fail("relation_coefficient_even");

    for (const auto& x : raw) cert.parity_relation_raw.push_back(x.get_si());
    for (const auto& x : prim) cert.parity_relation.push_back(x.get_si());

    // All relation coefficients odd forces sum b_i = 0 mod 2, while the
    // partition sizes must sum to N, odd: the certificate closes.
    cert.conclusion = (cert.N % 2 == 1) ? Conclusion::Contradiction : Conclusion::Inconclusive;
    if (cert.conclusion == Conclusion::Inconclusive) cert.failed_step = "N_not_odd";
    return cert;
}

std::string certificate_to_json(const PartitionCertificate& cert, int indent) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["certificate"] = "partition-contradiction";
    j["case"] = {{"a", cert.a}, {"b", cert.b}, {"N", cert.N}, {"q", 2 * cert.N}};
    j["conclusion"] = cert.conclusion == Conclusion::Contradiction ? "CONTRADICTION" : "INCONCLUSIVE";
    if (!cert.failed_step.empty()) j["failed_step"] = cert.failed_step;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : cert.foundation_checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    j["foundation_checks"] = std::move(checks);
    nlohmann::ordered_json t1 = nlohmann::ordered_json::array();
    for (const auto& [l, jj] : cert.scan_t1) t1.push_back({l, jj});
    j["scan_t1"] = std::move(t1);
    if (!cert.scan_63.empty()) {
        nlohmann::ordered_json s63 = nlohmann::ordered_json::array();
        for (const auto& [l, jj] : cert.scan_63) s63.push_back({l, jj});
        j["scan_63"] = std::move(s63);
    }
    j["possible_ratio_set_size"] = cert.possible_ratio_set_size;
    j["c_exponent"] = cert.c_exponent;
    j["power_sum_constants_times_7C"] = cert.power_sum_constants;
    j["parity_relation_raw"] = cert.parity_relation_raw;
    j["parity_relation"] = cert.parity_relation;
    j["sum_b_equals"] = cert.N;
    if (!cert.table4.empty()) {
        nlohmann::ordered_json tb = nlohmann::ordered_json::array();
        for (const auto& c : cert.table4)
            tb.push_back({{"t", c.t},
                          {"verdict_not_divisible", c.verdict_not_divisible},
                          {"computed_positions", c.computed_positions},
                          {"reference_positions", c.reference_positions},
                          {"positions_match", c.positions_match},
                          {"note", "positions are basis-dependent; the verdict is binding"}});
        j["table4_comparison"] = std::move(tb);
    }
    return j.dump(indent);
}

}  // namespace gbfv::part
