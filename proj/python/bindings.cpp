/*
 * Copyright 2026 The skewcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "skewcodes/bounds.hpp"
#include "skewcodes/codes.hpp"
#include "skewcodes/error.hpp"
#include "skewcodes/pseudo_linear.hpp"
#include "skewcodes/text.hpp"

namespace py = pybind11;
using namespace skewcodes;

namespace {

std::vector<std::vector<std::string>> matrix_strings(const Matrix& m) {
    std::vector<std::vector<std::string>> out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::string> row;
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_elem(m.field(), m.at(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

py::dict code_dict(const SkewGCCode& c, std::size_t d) {
    py::dict r;
    r["n"] = c.n;
    r["k"] = c.k;
    r["d"] = d;
    r["g"] = format_poly(c.g);
    r["generator_matrix"] = matrix_strings(c.G);
    return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Skew polynomial rings over finite fields and skew generalized cyclic codes";

    py::register_exception<Error>(m, "SkewcodesError", PyExc_ValueError);

    py::class_<Field>(m, "Field")
        .def(py::init([](std::uint32_t q) { return Field::from_order(q); }), py::arg("q"))
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("s", &Field::s)
        .def_property_readonly("q", &Field::q)
        .def("elements", [](const Field& f) {
            std::vector<std::string> out;
            for (std::uint32_t a = 0; a < f.q(); ++a) out.push_back(format_elem(f, Elem(a)));
            return out;
        })
        .def("mul", [](const Field& f, const std::string& a, const std::string& b) {
            return format_elem(f, f.mul(parse_elem(f, a), parse_elem(f, b)));
        })
        .def("add", [](const Field& f, const std::string& a, const std::string& b) {
            return format_elem(f, f.add(parse_elem(f, a), parse_elem(f, b)));
        })
        .def("inv", [](const Field& f, const std::string& a) { return format_elem(f, f.inv(parse_elem(f, a))); })
        .def("__repr__", [](const Field& f) { return "Field(" + std::to_string(f.q()) + ")"; });

    py::class_<RingCtx>(m, "Ring")
        .def(py::init([](const Field& f, std::uint32_t theta_t, const std::string& beta) {
                 return RingCtx(f, theta_t, parse_elem(f, beta));
             }),
             py::arg("field"), py::arg("theta_t") = 0, py::arg("beta") = "0")
        .def_property_readonly("field", [](const RingCtx& r) { return r.field(); })
        .def_property_readonly("theta_t", [](const RingCtx& r) { return r.theta().t(); })
        .def_property_readonly("beta", [](const RingCtx& r) { return format_elem(r.field(), r.beta()); })
        .def("poly", [](const RingCtx& r, const std::string& text) { return parse_poly(r, text); });

    py::class_<SkewPoly>(m, "SkewPoly")
        .def_property_readonly("degree", [](const SkewPoly& p) { return p.is_zero() ? -1 : p.degree(); })
        .def_property_readonly("coeffs", &coeff_strings)
        .def("is_invariant", &is_invariant)
        .def("__add__", [](const SkewPoly& a, const SkewPoly& b) { return a + b; })
        .def("__sub__", [](const SkewPoly& a, const SkewPoly& b) { return a - b; })
        .def("__mul__", [](const SkewPoly& a, const SkewPoly& b) { return a * b; })
        .def("__pow__", [](const SkewPoly& a, unsigned e) { return a.pow(e); })
        .def("__eq__", [](const SkewPoly& a, const SkewPoly& b) { return a == b; })
        .def("__str__", [](const SkewPoly& p) { return format_poly(p); })
        .def("__repr__", [](const SkewPoly& p) { return "SkewPoly(" + format_poly(p) + ")"; });

    m.def("right_divide", [](const SkewPoly& a, const SkewPoly& b) {
        auto r = right_divide(a, b);
        return py::make_tuple(r.quotient, r.remainder);
    }, "a = q*b + r; returns (q, r)");
    m.def("left_divide", [](const SkewPoly& a, const SkewPoly& b) {
        auto r = left_divide(a, b);
        return py::make_tuple(r.quotient, r.remainder);
    }, "a = b*q + r; returns (q, r)");
    m.def("lgcd", [](const SkewPoly& a, const SkewPoly& b) {
        auto r = lgcd_bezout(a, b);
        return py::make_tuple(r.gcd, r.u, r.v);
    }, "(gcd, u, v) with gcd = u*a + v*b");
    m.def("lclm", &lclm);
    m.def("invariant_factorization", [](const SkewPoly& f) {
        std::vector<std::pair<SkewPoly, int>> out;
        for (const auto& fp : invariant_factorization(f).factors) out.emplace_back(fp.factor, fp.multiplicity);
        return out;
    });
    m.def("right_divisors", [](const SkewPoly& f, std::uint64_t budget, unsigned jobs) {
        return enumerate_right_divisors(f, budget, jobs);
    }, py::arg("f"), py::arg("budget") = kDefaultBudget, py::arg("jobs") = 1);
    m.def("code", [](const SkewPoly& g, const SkewPoly& f) {
        const SkewGCCode c = code_from_generator_poly(g, f);
        return code_dict(c, minimum_distance(c));
    }, py::arg("g"), py::arg("f"), "parameters and generator matrix of the code generated by g modulo f");
    m.def("mds_search", [](std::uint32_t q, std::size_t n, const std::string& generator) {
        MdsSearchOptions o;
        if (generator == "primitive") o.convention = GeneratorConvention::primitive;
        else if (generator != "field-generator") throw Error(ErrorKind::invalid_argument, "generator must be field-generator or primitive");
        const RingCtx R(Field::from_order(q), 0);
        py::list rows;
        for (const auto& r : mds_search(R, n, o)) {
            py::dict d;
            d["n"] = r.n;
            d["k"] = r.k;
            d["d"] = r.d;
            d["g"] = format_poly(r.g, "x");
            std::vector<std::string> a;
            for (auto e : r.constacyclic) a.push_back(format_elem(R.field(), e));
            d["constacyclic_a"] = a;
            rows.append(d);
        }
        return rows;
    }, py::arg("q"), py::arg("n"), py::arg("generator") = "field-generator");
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int rc = cli::run_cli(args, out, err);
        return py::make_tuple(rc, out.str(), err.str());
    }, "run a command line in-process; returns (exit_code, stdout, stderr)");
}
