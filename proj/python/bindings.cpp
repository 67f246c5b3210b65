// Copyright 2026 The lrcreal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Rationals cross the boundary as "p/q" strings; the python package wraps
// them in fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lrcreal/commands.hpp"
#include "lrcreal/errors.hpp"
#include "lrcreal/expr.hpp"
#include "lrcreal/real.hpp"

namespace py = pybind11;
using namespace lrcreal;

namespace {

py::tuple interval_tuple(const Interval& iv) { return py::make_tuple(iv.lo.to_string(), iv.hi.to_string()); }

py::tuple command_tuple(const CommandResult& r) { return py::make_tuple(r.exit_code, r.out, r.err); }

} // namespace

PYBIND11_MODULE(_lrcreal, m) {
    m.doc() = "Exact real arithmetic on [0,1] with L/R/C digit streams";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<ExactReal>(m, "ExactReal")
        .def("digits", &ExactReal::digit_string, py::arg("n"), "First n digits as an L/R/C string.")
        .def("interval", [](const ExactReal& x, std::size_t n) { return interval_tuple(to_interval(x, n)); },
             py::arg("n"), "Bounds of the depth-n interval as (lo, hi) strings.")
        .def("decimal", [](const ExactReal& x, std::size_t k) { return to_decimal(x, k); }, py::arg("k"))
        .def("__repr__", [](const ExactReal& x) { return "<ExactReal " + x.digit_string(16) + "...>"; });

    m.def("from_rational", [](const std::string& r) { return from_rational(parse_rational(r)); }, py::arg("r"));
    m.def("from_digits",
          [](const std::string& prefix, const std::string& cycle) {
              return ExactReal(periodic_digits(parse_digits(prefix), parse_digits(cycle)));
          },
          py::arg("prefix"), py::arg("cycle"), "prefix followed by cycle repeated forever.");
    m.def("average", &average, py::arg("x"), py::arg("y"));
    m.def("affine",
          [](const std::string& ca, const std::string& cb, const std::string& cc, const ExactReal& x,
             const ExactReal& y, bool checked) {
              return affine(parse_rational(ca), parse_rational(cb), parse_rational(cc), x, y,
                            checked ? RangeCheck::Checked : RangeCheck::Unchecked);
          },
          py::arg("ca"), py::arg("cb"), py::arg("cc"), py::arg("x"), py::arg("y"), py::arg("checked") = true);
    m.def("compare",
          [](const ExactReal& x, const ExactReal& y, std::size_t n) {
              Comparison c = compare(x, y, n);
              const char* kind = c.kind == Comparison::Kind::Less      ? "less"
                                 : c.kind == Comparison::Kind::Greater ? "greater"
                                                                       : "indistinguishable";
              return py::make_tuple(kind, c.depth);
          },
          py::arg("x"), py::arg("y"), py::arg("n"));
    m.def("prefix_interval", [](const std::string& ds) { return interval_tuple(prefix_interval(parse_digits(ds))); },
          py::arg("digits"));

    m.def("parse_expr", [](const std::string& text) { return render(*parse_expr(text)); }, py::arg("text"),
          "Parses and re-renders an expression in canonical form.");
    m.def("eval",
          [](const std::string& expr, std::size_t digits, const std::string& format, std::size_t decimals) {
              return command_tuple(eval_command(expr, digits, parse_output_format(format), decimals));
          },
          py::arg("expr"), py::arg("digits") = 32, py::arg("format") = "digits", py::arg("decimals") = 10,
          "Returns (exit_code, stdout, stderr) as the CLI would.");
    m.def("selftest",
          [](std::size_t cases, std::size_t depth, std::uint64_t seed) {
              return command_tuple(selftest_command(cases, depth, seed));
          },
          py::arg("cases") = 1000, py::arg("depth") = 40, py::arg("seed") = 42);
    m.def("fib", [](std::size_t count) { return command_tuple(fib_command(count)); }, py::arg("count") = 10);

    (void)domain_error;
}
