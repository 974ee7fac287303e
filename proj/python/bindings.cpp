// Python bindings for the main operations: field construction, period
// oracle, quadratic partitions, closed forms, and code enumerators.
// Big integers cross the boundary as python ints via decimal strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclo/verify.hpp"

namespace py = pybind11;
using namespace cyclo;

namespace {

py::int_ to_py(const Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Int from_py(const py::int_& v) {
    py::object s = py::reinterpret_steal<py::object>(PyObject_Str(v.ptr()));
    return Int(s.cast<std::string>());
}

py::list poly_to_list(const IntPoly& poly) {
    py::list out;
    for (const auto& c : poly.coeffs()) out.append(to_py(c));
    return out;
}

py::list factored_to_list(const FactoredPoly& f) {
    py::list out;
    for (const auto& [poly, mult] : f.factors)
        out.append(py::make_tuple(poly_to_list(poly), mult));
    return out;
}

py::dict enumerator_to_dict(const WeightEnumerator& w) {
    py::dict out;
    for (const auto& [weight, count] : w.counts) out[py::int_(weight)] = to_py(count);
    return out;
}

py::list cyclo_to_list(const CycloInt& z) {
    py::list out;
    for (const auto& c : z.coords()) out.append(to_py(c));
    return out;
}

PartitionSet parts_for(uint64_t p, unsigned s, unsigned m) {
    return partitions_for_instance(p, s, m, classify(p, s, m));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact cyclotomic periods of 2-power order, closed forms, and cyclic codes";

    py::register_exception<BudgetError>(m, "BudgetError");
    py::register_exception<InvalidInputError>(m, "InvalidInputError");
    py::register_exception<InconsistencyError>(m, "InconsistencyError");

    py::class_<FieldElem>(m, "FieldElem")
        .def_property_readonly("coeffs",
                               [](const FieldElem& a) {
                                   py::list out;
                                   for (auto c : a.c) out.append(c);
                                   return out;
                               })
        .def("__eq__", [](const FieldElem& a, const FieldElem& b) { return a == b; })
        .def("__repr__", [](const FieldElem& a) {
            std::string s = "FieldElem([";
            for (size_t i = 0; i < a.c.size(); ++i)
                s += (i ? "," : "") + std::to_string(a.c[i]);
            return s + "])";
        });

    py::class_<FieldDesc>(m, "Field")
        .def_static("build", &FieldDesc::build, py::arg("p"), py::arg("s"))
        .def_property_readonly("p", &FieldDesc::p)
        .def_property_readonly("s", &FieldDesc::s)
        .def_property_readonly("q", [](const FieldDesc& f) { return to_py(f.q()); })
        .def_property_readonly("modulus",
                               [](const FieldDesc& f) {
                                   py::list out;
                                   for (auto c : f.modulus()) out.append(c);
                                   return out;
                               })
        .def_property_readonly("gamma", &FieldDesc::gamma)
        .def("from_index", &FieldDesc::from_index)
        .def("index_of", &FieldDesc::index_of)
        .def("add", &FieldDesc::add)
        .def("mul", &FieldDesc::mul)
        .def("pow", [](const FieldDesc& f, const FieldElem& a, const py::int_& n) {
            return f.pow(a, from_py(n));
        })
        .def("trace", &FieldDesc::trace)
        .def("rel_trace_nonzero", &FieldDesc::rel_trace_nonzero);

    m.def("period_counts", [](const FieldDesc& f, uint64_t e) {
        PeriodCounts pc = period_counts(f, e);
        py::list rows;
        for (const auto& row : pc.m) {
            py::list r;
            for (uint64_t v : row) r.append(v);
            rows.append(r);
        }
        return rows;
    });
    m.def("reduced_periods", [](const FieldDesc& f, uint64_t e) {
        py::list out;
        for (const auto& z : reduced_periods(period_counts(f, e))) {
            if (z.is_rational_integer()) out.append(to_py(z.rational_value()));
            else out.append(cyclo_to_list(z));
        }
        return out;
    });
    m.def("oracle_period_poly",
          [](const FieldDesc& f, uint64_t e) { return poly_to_list(oracle_period_poly(f, e)); });
    m.def("count_diagonal",
          [](const FieldDesc& f, uint64_t e, unsigned n) {
              return to_py(
                  count_diagonal_charsum(f, e, n, reduced_periods(period_counts(f, e))));
          });

    m.def("solve_2b2", [](uint64_t p, unsigned k) {
        auto r = solve_2B2(p, k);
        return py::make_tuple(r.A, r.B);
    });
    m.def("solve_sum_of_squares", [](uint64_t p, unsigned k) {
        auto r = solve_D2(p, k);
        return py::make_tuple(r.C, r.D);
    });

    m.def("classify",
          [](uint64_t p, unsigned s, unsigned m_) { return to_string(classify(p, s, m_)); });
    m.def("spectrum", [](uint64_t p, unsigned s, unsigned m_) {
        Spectrum sp = spectrum(p, s, m_, parts_for(p, s, m_));
        py::list out;
        for (const auto& e : sp.entries)
            out.append(py::make_tuple(sp.entry_display(e), e.multiplicity));
        return out;
    });
    m.def("factorization", [](uint64_t p, unsigned s, unsigned m_) {
        return factored_to_list(factorization(p, s, m_, parts_for(p, s, m_)));
    });
    m.def("factorization_display", [](uint64_t p, unsigned s, unsigned m_) {
        return factorization(p, s, m_, parts_for(p, s, m_)).to_string();
    });
    m.def("counts_formula", [](uint64_t p, unsigned s, unsigned m_, unsigned n) {
        return to_py(counts_formula(p, s, m_, n, parts_for(p, s, m_)));
    });
    m.def("semiprimitive_poly", [](uint64_t p, unsigned s, uint64_t e) {
        return factored_to_list(semiprimitive_poly(p, s, e));
    });
    m.def("char2_poly",
          [](unsigned s, uint64_t f) { return factored_to_list(example1_poly(s, f)); });
    m.def("subfield_poly", [](uint64_t p, unsigned s, unsigned ell) {
        return factored_to_list(example2_poly(p, s, ell));
    });

    py::class_<CodeSpec>(m, "CodeSpec")
        .def_property_readonly("length", [](const CodeSpec& c) { return c.length; })
        .def_property_readonly("dim", [](const CodeSpec& c) { return c.dim; })
        .def_property_readonly("e", [](const CodeSpec& c) { return c.e; })
        .def_property_readonly("m", [](const CodeSpec& c) { return c.m; });
    m.def("build_code", &build_code, py::arg("field"), py::arg("ell"), py::arg("N"));
    m.def("enumerator_closed_form", [](const FieldDesc& f, unsigned ell, uint64_t N) {
        CodeSpec c = build_code(f, ell, N);
        return enumerator_to_dict(enumerator_closed_form(c, parts_for(c.p, c.s, c.m)));
    });
    m.def(
        "weight_distribution_bruteforce",
        [](const FieldDesc& f, unsigned ell, uint64_t N, uint64_t budget, uint64_t seed) {
            CodeSpec c = build_code(f, ell, N);
            BruteForceOptions opt;
            opt.budget = budget;
            opt.seed = seed;
            WeightEnumerator w = weight_distribution_bruteforce(f, c, opt);
            return py::make_tuple(enumerator_to_dict(w), w.sampled);
        },
        py::arg("field"), py::arg("ell"), py::arg("N"), py::arg("budget") = 100000000,
        py::arg("seed") = 12345);

    m.def(
        "verify_instance",
        [](uint64_t p, unsigned s, unsigned m_) {
            verify::Options opt;
            auto rep = verify::verify_factor_instance({p, s, m_}, opt);
            py::dict out;
            out["instance"] = rep.key;
            out["case"] = rep.case_tag;
            py::dict checks;
            for (const auto& c : rep.checks)
                checks[py::str(c.name)] =
                    c.status == verify::Status::Pass
                        ? "pass"
                        : (c.status == verify::Status::Fail ? "fail" : "skip");
            out["checks"] = checks;
            out["ok"] = rep.all_passed();
            return out;
        },
        py::arg("p"), py::arg("s"), py::arg("m"));
}
