#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "gbfv/cyclotomic.hpp"
#include "gbfv/diophantine.hpp"
#include "gbfv/gbf.hpp"
#include "gbfv/numtheory.hpp"
#include "gbfv/partition.hpp"
#include "gbfv/survey.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const std::string& dumped) {
    return py::module_::import("json").attr("loads")(dumped);
}

py::dict solver_dict(const gbfv::dio::MinExponentResult& r) {
    py::dict d;
    d["family"] = gbfv::dio::family_name(r.family);
    d["p1"] = r.p1;
    d["p2"] = r.p2;
    d["found"] = r.found;
    if (r.found) {
        d["m"] = r.m;
        d["witness"] = r.witness;
    }
    if (r.m1) d["m1"] = *r.m1;
    if (r.m2) d["m2"] = *r.m2;
    d["searched_up_to"] = r.searched_up_to;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact cyclotomic certificates and Diophantine solvers for "
              "generalized bent function nonexistence";

    m.def("min_exponent_q1",
          [](gbfv::nt::u64 p1, gbfv::nt::u64 p2, int cap) {
              return solver_dict(gbfv::dio::min_exponent_q1(p1, p2, cap));
          },
          py::arg("p1"), py::arg("p2"), py::arg("cap") = 40);
    m.def("min_exponent_q2",
          [](gbfv::nt::u64 p1, gbfv::nt::u64 p2, int cap) {
              return solver_dict(gbfv::dio::min_exponent_q2(p1, p2, cap));
          },
          py::arg("p1"), py::arg("p2"), py::arg("cap") = 40);
    m.def("min_exponent_system",
          [](gbfv::nt::u64 p1, gbfv::nt::u64 p2, int cap, int threads) {
              return solver_dict(gbfv::dio::min_exponent_system(p1, p2, cap, threads));
          },
          py::arg("p1"), py::arg("p2"), py::arg("cap") = 40, py::arg("threads") = 1);

    m.def("mult_order", &gbfv::nt::mult_order, py::arg("a"), py::arg("n"));
    m.def("is_self_conjugate", &gbfv::nt::is_self_conjugate, py::arg("p"), py::arg("N"));
    m.def("schmidt_F", &gbfv::nt::schmidt_F, py::arg("m"), py::arg("n"));
    m.def("pair_qualifies",
          [](gbfv::nt::u64 p1, gbfv::nt::u64 p2, const std::string& family) {
              return gbfv::nt::pair_qualifies(p1, p2, gbfv::survey::family_from_name(family));
          },
          py::arg("p1"), py::arg("p2"), py::arg("family"));

    m.def("verify_foundation", [] {
        py::list out;
        for (const auto& c : gbfv::part::verify_foundation_21()) {
            py::dict d;
            d["name"] = c.name;
            d["ok"] = c.ok;
            d["detail"] = c.detail;
            out.append(d);
        }
        return out;
    });
    m.def("scan_divisibility",
          [](long conductor, int lmax, long jcount) {
              std::vector<std::pair<int, long>> v;
              for (auto& p : gbfv::part::scan_divisibility(conductor, lmax, jcount)) v.push_back(p);
              return v;
          },
          py::arg("conductor"), py::arg("l_max"), py::arg("j_count"));
    m.def("contradiction_certificate",
          [](int a, int b, bool strict_table4) {
              auto cert = gbfv::part::contradiction_certificate(a, b, strict_table4);
              return json_to_py(gbfv::part::certificate_to_json(cert));
          },
          py::arg("a"), py::arg("b"), py::arg("strict_table4") = false);

    m.def("fourier_spectrum",
          [](long q, const std::vector<long>& values) {
              std::vector<std::string> out;
              for (const auto& a : gbfv::gbf::fourier_spectrum(gbfv::gbf::make_function(q, values)))
                  out.push_back(gbfv::cyclo::to_string(a));
              return out;
          },
          py::arg("q"), py::arg("values"));
    m.def("is_gbf",
          [](long q, const std::vector<long>& values) {
              return gbfv::gbf::is_gbf(gbfv::gbf::make_function(q, values));
          },
          py::arg("q"), py::arg("values"));
    m.def("exhaustive_search",
          [](long q) -> py::object {
              auto f = gbfv::gbf::exhaustive_search(q);
              if (!f) return py::none();
              return py::cast(f->values);
          },
          py::arg("q"));

    m.def("survey",
          [](const std::string& family, gbfv::nt::u64 bound, int threads) {
              auto row = gbfv::survey::survey(gbfv::survey::family_from_name(family), bound, threads);
              py::dict d;
              d["family"] = family;
              d["B"] = row.bound;
              d["first"] = row.count_condition1;
              d["order"] = row.count_order;
              d["nonquartic"] = row.count_nonquartic;
              d["r1"] = row.r1();
              d["r2"] = row.r2();
              return d;
          },
          py::arg("family"), py::arg("bound"), py::arg("threads") = 0);
    m.def("artin_constant",
          [](gbfv::nt::u64 cutoff) {
              auto e = gbfv::survey::artin_constant(cutoff);
              py::dict d;
              d["value"] = e.value;
              d["tail_bound"] = e.tail_bound;
              d["cutoff"] = e.cutoff;
              return d;
          },
          py::arg("cutoff") = 1000000);
    m.def("delta_density",
          [](gbfv::nt::u64 cutoff) {
              auto e = gbfv::survey::delta_density(cutoff);
              py::dict d;
              d["value"] = e.value;
              d["tail_bound"] = e.tail_bound;
              d["cutoff"] = e.cutoff;
              return d;
          },
          py::arg("cutoff") = 100000);

    m.def("norm", [](const std::string& element) {
        auto x = gbfv::cyclo::parse_cyc_rat(element);
        mpq_class n = gbfv::cyclo::absolute_norm(x);
        return n.get_str();
    });
    m.def("cyc_str", [](const std::string& element) {
        return gbfv::cyclo::to_string(gbfv::cyclo::parse_cyc_rat(element));
    });
}
