#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "devries/suites.hpp"

namespace py = pybind11;
using namespace devries;

namespace {

std::vector<std::tuple<std::string, std::string, std::string>> report_items(
    const CheckReport& r) {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& it : r.items)
        out.emplace_back(it.name, it.skipped ? "skip" : (it.pass ? "pass" : "fail"), it.detail);
    return out;
}

DomainKind kind_of(const std::string& name) {
    if (name == "int") return DomainKind::integers;
    if (name == "rational") return DomainKind::rationals;
    throw ParseError("domain must be 'int' or 'rational'");
}

const IntervalCarrier& interval_carrier() {
    static IntervalCarrier c;
    return c;
}

const FiniteCarrier& finite_carrier(int atoms) {
    static std::map<int, FiniteCarrier> cache;
    auto it = cache.find(atoms);
    if (it == cache.end()) it = cache.emplace(atoms, FiniteCarrier(atoms)).first;
    return it->second;
}

} // namespace

PYBIND11_MODULE(devries, m) {
    m.doc() = "Exact de Vries powers: regular open sets of [0,1], normal step functions, "
              "Specker algebras over ordered domains, proximity morphisms and ends";

    py::class_<CheckReport>(m, "CheckReport")
        .def_property_readonly("suite", [](const CheckReport& r) { return r.suite; })
        .def("all_pass", &CheckReport::all_pass)
        .def("items", &report_items)
        .def("text", &CheckReport::render_text)
        .def("kv", &CheckReport::render_kv);

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ScaleError>(m, "ScaleError", PyExc_RuntimeError);

    // --- regular open sets of [0,1] ------------------------------------------
    m.def("canonicalize", [](const std::string& raw) {
        return to_string(RegularOpenSet::canonicalize(parse_raw_intervals(raw)));
    }, py::arg("intervals"), "Int(Cl(union)) of raw rational intervals, canonical form");
    m.def("meet", [](const std::string& a, const std::string& b) {
        return to_string(ro_meet(parse_regular_open(a), parse_regular_open(b)));
    });
    m.def("join", [](const std::string& a, const std::string& b) {
        return to_string(ro_join(parse_regular_open(a), parse_regular_open(b)));
    });
    m.def("complement", [](const std::string& a) {
        return to_string(ro_complement(parse_regular_open(a)));
    });
    m.def("prox", [](const std::string& a, const std::string& b) {
        return ro_proximity(parse_regular_open(a), parse_regular_open(b));
    }, "Cl(a) contained in b");
    m.def("interpolate", [](const std::string& a, const std::string& b) {
        return to_string(ro_interpolate(parse_regular_open(a), parse_regular_open(b)));
    });
    m.def("below", [](const std::string& a) {
        return to_string(ro_below(parse_regular_open(a)));
    });
    m.def("pl_hat", [](const std::string& plmap, const std::string& u) {
        return to_string(pl_hat(parse_plmap(plmap), parse_regular_open(u)));
    }, py::arg("plmap"), py::arg("set"), "preimage followed by Int(Cl(.))");
    m.def("is_clopen", [](const std::string& a) {
        return ro_is_clopen(parse_regular_open(a));
    });
    m.def("carrier_is_zero_dimensional", &interval_is_zero_dimensional);
    m.def("carrier_is_extremally_disconnected", &interval_is_extremally_disconnected);

    // --- normal step functions -------------------------------------------------
    m.def("normalize", [](const std::string& step) {
        return to_string(normalize(parse_step_function(step)));
    });
    m.def("is_normal", [](const std::string& step) {
        return is_normal(parse_step_function(step));
    });
    m.def("nf_prox", [](const std::string& f, const std::string& g) {
        return nf_prox(parse_step_function(f), parse_step_function(g));
    });
    m.def("continuity_domain", [](const std::string& step) {
        PointSet d = continuity_domain(parse_step_function(step));
        std::vector<std::string> out;
        for (const auto& s : d.segs()) {
            std::string piece = std::string(s.lo_in ? "[" : "(") + rat_to_string(s.lo) + "," +
                                rat_to_string(s.hi) + (s.hi_in ? "]" : ")");
            out.push_back(piece);
        }
        return out;
    });

    // --- element arithmetic over the interval carrier ---------------------------
    auto interval_binary = [](auto op) {
        return [op](const std::string& a, const std::string& b) {
            const IntervalCarrier& ic = interval_carrier();
            return to_string(op(parse_interval_element(ic, a), parse_interval_element(ic, b)));
        };
    };
    m.def("add", interval_binary([](const auto& a, const auto& b) { return sp_add(a, b); }),
          "sum of interval-carrier elements in canonical orthogonal form");
    m.def("mul", interval_binary([](const auto& a, const auto& b) { return sp_mul(a, b); }));
    m.def("element_meet",
          interval_binary([](const auto& a, const auto& b) { return sp_meet(a, b); }));
    m.def("element_join",
          interval_binary([](const auto& a, const auto& b) { return sp_join(a, b); }));
    m.def("element_abs", [](const std::string& a) {
        const IntervalCarrier& ic = interval_carrier();
        return to_string(sp_abs(parse_interval_element(ic, a)));
    });
    m.def("element_prox", [](const std::string& a, const std::string& b) {
        const IntervalCarrier& ic = interval_carrier();
        return sp_prox(parse_interval_element(ic, a), parse_interval_element(ic, b));
    });
    m.def("element_leq", [](const std::string& a, const std::string& b) {
        const IntervalCarrier& ic = interval_carrier();
        return sp_leq(parse_interval_element(ic, a), parse_interval_element(ic, b));
    });

    // --- finite carriers: ends and duality ---------------------------------------
    m.def("finite_ends", [](const std::string& algebra_file) {
        FiniteAlgebraSpec spec = parse_finite_algebra(algebra_file);
        std::vector<std::string> out;
        for (Mask g : ends(spec.ba, spec.prox)) out.push_back(spec.ba.element_to_string(g));
        return out;
    }, "end generators of a finite proximity algebra, from its file format");
    m.def("ends_cross_check", [](int atoms) {
        EndsCrossCheck cc = ends_of_specker(finite_carrier(atoms));
        return cc.agree;
    });
    m.def("duality_space_roundtrip", [](int points) {
        DualityReport r = duality_roundtrip_space(points);
        return py::make_tuple(r.pass, r.detail);
    });
    m.def("duality_algebra_roundtrip", [](int atoms, std::uint64_t seed, int samples) {
        Rng rng(seed);
        DualityReport r = duality_roundtrip_algebra(finite_carrier(atoms), rng,
                                                    DomainKind::integers, samples);
        return py::make_tuple(r.pass, r.detail);
    });

    // --- suites --------------------------------------------------------------------
    m.def("suite_dv_interval", &dv_interval_suite, py::arg("seed"), py::arg("samples"));
    m.def("suite_rigidity", &rigidity_suite);
    m.def("suite_domain_laws", [](std::uint64_t seed, const std::string& domain, int n) {
        return domain_law_suite(seed, kind_of(domain), n);
    });
    m.def("suite_prox_axioms", [](std::uint64_t seed, const std::string& domain, int n) {
        return prox_axiom_suite(interval_carrier(), seed, kind_of(domain), n);
    });
    m.def("suite_fring", [](std::uint64_t seed, const std::string& domain, int n) {
        return fring_suite(interval_carrier(), seed, kind_of(domain), n);
    });
    m.def("suite_oracle", [](std::uint64_t seed, const std::string& domain, int n) {
        return oracle_equivalence_suite(seed, kind_of(domain), n);
    });
    m.def("suite_level_formulas", [](std::uint64_t seed, const std::string& domain, int n) {
        return level_formula_suite(seed, kind_of(domain), n);
    });
    m.def("suite_prox_theorem", [](std::uint64_t seed, const std::string& domain, int n) {
        return prox_theorem_suite(seed, kind_of(domain), n);
    });
    m.def("suite_roundtrip", [](std::uint64_t seed, const std::string& domain, int n) {
        return roundtrip_suite(seed, kind_of(domain), n);
    });
    m.def("suite_normalization", [](std::uint64_t seed, const std::string& domain, int n) {
        return normalization_suite(seed, kind_of(domain), n);
    });
    m.def("suite_ends", &ends_agreement_suite, py::arg("seed"), py::arg("samples"));
    m.def("suite_duality", &duality_suite, py::arg("seed"), py::arg("samples"));
    m.def("suite_morphisms", &morphism_suite, py::arg("seed"), py::arg("samples"));
}
