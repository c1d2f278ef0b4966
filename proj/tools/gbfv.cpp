// gbfv: exact verification toolkit for nonexistence certificates of
// generalized bent functions Z_q -> Z_q with q = 2N, N odd.
//
// Subcommands: solve, qualify, verify, scan, spectrum, search, survey,
// density.  JSON on stdout (CSV for survey tables); progress and errors on
// stderr.  Exit codes: 0 verified/found, 2 not-found-within-cap, 3
// inconclusive certificate, 1 usage or input error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbfv/cyclotomic.hpp"
#include "gbfv/diophantine.hpp"
#include "gbfv/gbf.hpp"
#include "gbfv/numtheory.hpp"
#include "gbfv/partition.hpp"
#include "gbfv/survey.hpp"

namespace {

using nlohmann::ordered_json;

int default_threads() {
    if (const char* env = std::getenv("GBFV_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

ordered_json solver_json(const gbfv::dio::MinExponentResult& r) {
    ordered_json j;
    j["schema_version"] = 1;
    j["family"] = gbfv::dio::family_name(r.family);
    j["p1"] = r.p1;
    j["p2"] = r.p2;
    j["found"] = r.found;
    if (r.found) {
        j["m"] = r.m;
        j["witness"] = r.witness;
        if (r.family == gbfv::dio::EqFamily::Q2) j["which_equation"] = r.which_equation;
    }
    if (r.m1) j["m1"] = *r.m1;
    if (r.m2) j["m2"] = *r.m2;
    j["searched_up_to"] = r.searched_up_to;
    return j;
}

ordered_json pair_json(const gbfv::nt::PrimePairRecord& rec) {
    ordered_json j;
    j["schema_version"] = 1;
    j["p1"] = rec.p1;
    j["p2"] = rec.p2;
    j["class_mod_8"] = {rec.class1, rec.class2};
    j["legendre_p1_p2"] = rec.legendre_p1_p2;
    j["ord2_p1"] = rec.ord2_p1;
    j["ord2_p2"] = rec.ord2_p2;
    j["ord2_p1p2"] = rec.ord2_p1p2;
    j["wieferich"] = {rec.wieferich_p1, rec.wieferich_p2};
    if (rec.quartic_residue_2_p2)
        j["quartic_residue_2_p2"] = *rec.quartic_residue_2_p2;
    else
        j["quartic_residue_2_p2"] = "not-applicable";
    j["qualifies_thm1"] = rec.qualifies_thm1;
    j["qualifies_thm2"] = rec.qualifies_thm2;
    j["qualifies_thm3"] = rec.qualifies_thm3;
    return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact-arithmetic certificates, minimal-exponent solvers and prime-pair "
        "surveys for generalized bent function nonexistence"};
    app.set_config("--config");
    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads (default: cores, or GBFV_THREADS)");

    // ---- solve ----------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "minimal-exponent Diophantine solvers");
    solve->require_subcommand(1);
    struct {
        gbfv::nt::u64 p1 = 0, p2 = 0;
        int cap = 40;
    } sargs;
    auto add_solver = [&](const std::string& name, const std::string& desc) {
        auto* sub = solve->add_subcommand(name, desc);
        sub->add_option("--p1", sargs.p1, "first odd prime")->required();
        sub->add_option("--p2", sargs.p2, "second odd prime")->required();
        sub->add_option("--cap", sargs.cap, "largest exponent searched (default 40)");
        return sub;
    };
    auto* q1 = add_solver("q1", "least m with p1*A^2 + p2*B^2 = 2^(m+2)");
    auto* q2 = add_solver(
        "q2", "L = min(m1, m2): 2^(m1+2) = x^2 + p1*y^2, 2^(m2+2) = x^2 + p1*p2*y^2 (y != 0)");
    auto* sys = add_solver("system",
                           "least m with 2^(m+4) = p1^2*X^2 + p2*Y^2 + 2*p1*p2*(Z^2+W^2) and "
                           "X*Y + 2*B*Z*W + A*(W^2-Z^2) = 0, p2 = A^2 + B^2");

    // ---- qualify --------------------------------------------------------
    auto* qualify = app.add_subcommand("qualify", "residue-class, Legendre and order-of-2 tests for a prime pair");
    struct {
        gbfv::nt::u64 p1 = 0, p2 = 0;
        std::string family = "thm1";
        bool cond1_only = false;
    } qargs;
    qualify->add_option("--p1", qargs.p1)->required();
    qualify->add_option("--p2", qargs.p2)->required();
    qualify->add_option("--family", qargs.family, "thm1|thm2|thm3");
    qualify->add_flag("--cond1-only", qargs.cond1_only,
                      "check only the residue-class and Legendre part");

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "partition contradiction certificates for q = 2 * 3^a * 7^b");
    verify->require_subcommand(1);
    auto* case42 = verify->add_subcommand("case42", "the q = 42 certificate (a = b = 1)");
    auto* case3a7b = verify->add_subcommand("case-3a7b", "general (a, b) certificate");
    struct {
        int a = 1, b = 1;
        bool strict = false;
        bool allow_large = false;
    } vargs;
    case3a7b->add_option("--a", vargs.a, "exponent of 3")->required();
    case3a7b->add_option("--b", vargs.b, "exponent of 7")->required();
    for (auto* c : {case42, case3a7b}) {
        c->add_flag("--strict-table4", vargs.strict,
                    "also compare conductor-63 mod-2 coordinate vectors against the recorded "
                    "reference (basis-dependent)");
        c->add_flag("--allow-large", vargs.allow_large, "lift the phi(N) <= 2000 guard");
    }

    // ---- scan -----------------------------------------------------------
    auto* scan = app.add_subcommand("scan", "all (l, j) with 2 | beta^l + conj(beta)^l * w^j");
    struct {
        long conductor = 21;
        int lmax = 6;
        long jcount = -1;
    } scargs;
    scan->add_option("--conductor", scargs.conductor, "21 or 63")->required();
    scan->add_option("--lmax", scargs.lmax, "largest power of beta (default 6)");
    scan->add_option("--jcount", scargs.jcount, "root-of-unity indices scanned (default: conductor for 21, 2*conductor for 63)");

    // ---- spectrum -------------------------------------------------------
    auto* spectrum = app.add_subcommand("spectrum", "exact Fourier coefficients of f: Z_q -> Z_q");
    struct {
        long q = 0;
        std::string f;
    } spargs;
    spectrum->add_option("--q", spargs.q, "modulus (odd, or 2 mod 4)")->required();
    spectrum->add_option("--f", spargs.f, "comma-separated values, or identity|square|zero|const=c")->required();

    // ---- search ---------------------------------------------------------
    auto* search = app.add_subcommand("search", "exhaustive flat-spectrum search (q <= 6)");
    long search_q = 0;
    search->add_option("--q", search_q, "modulus")->required();

    // ---- survey ---------------------------------------------------------
    auto* surveyc = app.add_subcommand("survey", "prime-pair counts per family up to a bound");
    struct {
        std::string family = "thm1";
        gbfv::nt::u64 bound = 200;
        std::string out = "csv";
    } svargs;
    surveyc->add_option("--family", svargs.family, "thm1|thm2|thm3")->required();
    surveyc->add_option("--bound", svargs.bound, "upper bound B for both primes")->required();
    surveyc->add_option("--out", svargs.out, "csv (default) or json");

    // ---- density --------------------------------------------------------
    auto* density = app.add_subcommand("density", "Euler-product density constants with tail bounds");
    struct {
        bool artin = false;
        bool delta = false;
        gbfv::nt::u64 cutoff = 1000000;
    } dargs;
    density->add_flag("--artin", dargs.artin, "A = prod_p (1 - 1/(p(p-1)))");
    density->add_flag("--delta", dargs.delta, "delta = sum mu(r)/(8 r phi(r)) = A/4");
    density->add_option("--cutoff", dargs.cutoff, "truncation cutoff (default 10^6)");

    app.require_subcommand(1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (solve->parsed()) {
            gbfv::dio::MinExponentResult r;
            if (q1->parsed())
                r = gbfv::dio::min_exponent_q1(sargs.p1, sargs.p2, sargs.cap);
            else if (q2->parsed())
                r = gbfv::dio::min_exponent_q2(sargs.p1, sargs.p2, sargs.cap);
            else
                r = gbfv::dio::min_exponent_system(sargs.p1, sargs.p2, sargs.cap, threads,
                                                   [](int m) {
                                                       if (m >= 28)
                                                           std::cerr << "progress: exponent " << m << "\n";
                                                   });
            emit(solver_json(r));
            return r.found ? 0 : 2;
        }
        if (qualify->parsed()) {
            auto rec = gbfv::nt::make_pair_record(qargs.p1, qargs.p2);
            auto fam = gbfv::survey::family_from_name(qargs.family);
            ordered_json j = pair_json(rec);
            j["family"] = qargs.family;
            j["condition1"] = gbfv::nt::pair_condition1(qargs.p1, qargs.p2, fam);
            j["qualifies"] = qargs.cond1_only
                                 ? gbfv::nt::pair_condition1(qargs.p1, qargs.p2, fam)
                                 : gbfv::nt::pair_qualifies(qargs.p1, qargs.p2, fam);
            emit(j);
            return 0;
        }
        if (verify->parsed()) {
            int a = case42->parsed() ? 1 : vargs.a;
            int b = case42->parsed() ? 1 : vargs.b;
            auto cert = gbfv::part::contradiction_certificate(a, b, vargs.strict,
                                                              vargs.allow_large, threads);
            std::cout << gbfv::part::certificate_to_json(cert) << "\n";
            return cert.conclusion == gbfv::part::Conclusion::Contradiction ? 0 : 3;
        }
        if (scan->parsed()) {
            long jcount = scargs.jcount > 0
                              ? scargs.jcount
                              : (scargs.conductor == 21 ? 21 : 2 * scargs.conductor);
            auto found = gbfv::part::scan_divisibility(scargs.conductor, scargs.lmax, jcount, threads);
            ordered_json j;
            j["schema_version"] = 1;
            j["conductor"] = scargs.conductor;
            j["l_max"] = scargs.lmax;
            j["j_count"] = jcount;
            ordered_json pairs = ordered_json::array();
            for (const auto& [l, jj] : found) pairs.push_back({l, jj});
            j["pairs"] = std::move(pairs);
            emit(j);
            return 0;
        }
        if (spectrum->parsed()) {
            auto f = gbfv::gbf::parse_function(spargs.q, spargs.f);
            auto spec = gbfv::gbf::fourier_spectrum(f);
            ordered_json j;
            j["schema_version"] = 1;
            j["q"] = spargs.q;
            j["f"] = f.values;
            ordered_json alphas = ordered_json::array();
            for (const auto& a : spec) {
                ordered_json e;
                e["alpha"] = gbfv::cyclo::to_string(a);
                e["alpha_absq"] = gbfv::cyclo::to_string(a * a.conj());
                alphas.push_back(std::move(e));
            }
            j["spectrum"] = std::move(alphas);
            j["is_gbf"] = gbfv::gbf::is_gbf(f);
            emit(j);
            return 0;
        }
        if (search->parsed()) {
            auto found = gbfv::gbf::exhaustive_search(search_q, threads);
            ordered_json j;
            j["schema_version"] = 1;
            j["q"] = search_q;
            j["exhaustive"] = true;
            j["found"] = found.has_value();
            if (found) j["f"] = found->values;
            emit(j);
            return found ? 0 : 2;
        }
        if (surveyc->parsed()) {
            auto fam = gbfv::survey::family_from_name(svargs.family);
            if (svargs.bound >= 100000)
                std::cerr << "progress: sieving and pairing up to " << svargs.bound << "\n";
            auto row = gbfv::survey::survey(fam, svargs.bound, threads);
            if (svargs.out == "json") {
                ordered_json j;
                j["schema_version"] = 1;
                j["family"] = svargs.family;
                j["B"] = row.bound;
                j["first"] = row.count_condition1;
                j["order"] = row.count_order;
                if (fam != gbfv::nt::Family::Thm1) j["nonquartic"] = row.count_nonquartic;
                j["r1"] = row.r1();
                if (fam != gbfv::nt::Family::Thm1) j["r2"] = row.r2();
                emit(j);
            } else {
                std::cout << gbfv::survey::csv_header() << "\n" << gbfv::survey::to_csv(row) << "\n";
            }
            return 0;
        }
        if (density->parsed()) {
            if (dargs.artin == dargs.delta)
                throw std::invalid_argument("density: pass exactly one of --artin or --delta");
            ordered_json j;
            j["schema_version"] = 1;
            if (dargs.artin) {
                auto e = gbfv::survey::artin_constant(dargs.cutoff);
                j["constant"] = "artin";
                j["cutoff"] = e.cutoff;
                j["value"] = e.value;
                j["tail_bound"] = e.tail_bound;
                j["two_a"] = 2 * e.value;
            } else {
                auto e = gbfv::survey::delta_density(dargs.cutoff);
                j["constant"] = "delta_2_2_8_1";
                j["cutoff"] = e.cutoff;
                j["value"] = e.value;
                j["tail_bound"] = e.tail_bound;
            }
            emit(j);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
