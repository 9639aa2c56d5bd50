#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "askzeta/ask.hpp"
#include "askzeta/catalog.hpp"
#include "askzeta/groups.hpp"
#include "askzeta/json_io.hpp"
#include "askzeta/verify.hpp"
#include "askzeta/zeta_forms.hpp"

namespace py = pybind11;
using namespace askzeta;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_fraction_string(r));
}

py::list to_fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_fraction(v));
  return out;
}

py::int_ to_pyint(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

BigInt from_pyint(const py::handle& obj) {
  if (!py::isinstance<py::int_>(obj)) throw py::type_error("tensor entries must be integers");
  return BigInt(py::str(obj).cast<std::string>());
}

MRep rep_from_nested(const py::sequence& nested) {
  const std::size_t l = py::len(nested);
  if (l == 0) throw py::value_error("empty tensor: use MRep.zeros for l = 0");
  const std::size_t d = py::len(nested[0]);
  const std::size_t e = d ? py::len(nested[0].cast<py::sequence>()[0]) : 0;
  MRep::Nested c(l);
  for (std::size_t h = 0; h < l; ++h) {
    const auto slice = nested[h].cast<py::sequence>();
    c[h].resize(py::len(slice));
    for (std::size_t i = 0; i < c[h].size(); ++i) {
      const auto row = slice[i].cast<py::sequence>();
      for (const auto& x : row) c[h][i].push_back(from_pyint(x));
    }
  }
  return MRep::from_nested(Shape{l, d, e}, c);
}

py::list rep_to_nested(const MRep& rep) {
  py::list out;
  for (std::size_t h = 0; h < rep.l(); ++h) {
    py::list slice;
    for (std::size_t i = 0; i < rep.d(); ++i) {
      py::list row;
      for (std::size_t j = 0; j < rep.e(); ++j) row.append(to_pyint(rep.at(h, i, j)));
      slice.append(row);
    }
    out.append(slice);
  }
  return out;
}

EnumerationOptions enumeration(std::uint64_t budget, unsigned workers) { return {budget, workers}; }

CatalogParams catalog_params(std::optional<long long> l, std::optional<long long> d,
                             std::optional<long long> e, std::optional<long long> r) {
  return {l, d, e, r};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact ask, ask zeta coefficients, Knuth duals, hulls and class numbers";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<MRep>(m, "MRep", "Structure constants c[h][i][j] of a module representation")
      .def(py::init(&rep_from_nested), py::arg("coeffs"),
           "Build from nested integer lists c[h][i][j] (shape l x d x e).")
      .def_static(
          "zeros", [](std::size_t l, std::size_t d, std::size_t e) { return MRep(Shape{l, d, e}); },
          py::arg("l"), py::arg("d"), py::arg("e"))
      .def_static("from_json", [](const std::string& text) { return parse_rep(text); },
                  py::arg("text"))
      .def("to_json", [](const MRep& r) { return rep_to_json(r).dump(); })
      .def("to_list", &rep_to_nested)
      .def_property_readonly("shape",
                             [](const MRep& r) { return py::make_tuple(r.l(), r.d(), r.e()); })
      .def_property_readonly("l", &MRep::l)
      .def_property_readonly("d", &MRep::d)
      .def_property_readonly("e", &MRep::e)
      .def(py::self == py::self)
      .def("__repr__", [](const MRep& r) {
        return "MRep(shape=(" + std::to_string(r.l()) + ", " + std::to_string(r.d()) + ", " +
               std::to_string(r.e()) + "))";
      });

  m.def("dual", [](const MRep& r, const std::string& op) { return dual(r, parse_dual_kind(op)); },
        py::arg("rep"), py::arg("op"), "Knuth dual: 'circ', 'bullet' or 'vee'.");
  m.def("direct_sum", &direct_sum, py::arg("first"), py::arg("second"));
  m.def("alternating_hull", &alternating_hull, py::arg("rep"));
  m.def(
      "collapsed_power",
      [](const MRep& r, unsigned k, const std::string& side) {
        return collapsed_power(r, k, parse_collapse_side(side));
      },
      py::arg("rep"), py::arg("m"), py::arg("side") = "module");

  m.def(
      "ask",
      [](const MRep& r, std::int64_t p, int n, unsigned mom, const std::string& strategy,
         std::uint64_t budget, unsigned workers) {
        py::gil_scoped_release release;
        const auto res = ask_m(r, TruncatedRing(p, n), mom, parse_strategy(strategy),
                               enumeration(budget, workers));
        py::gil_scoped_acquire acquire;
        return to_fraction(res.value);
      },
      py::arg("rep"), py::arg("p"), py::arg("n"), py::arg("m") = 1, py::arg("strategy") = "auto",
      py::arg("budget") = EnumerationOptions{}.budget, py::arg("workers") = 0,
      "Exact average of |Ker A(a)|^m over a in (Z/p^n)^l.");

  m.def(
      "zeta_coeffs",
      [](const MRep& r, std::int64_t p, int levels, unsigned mom, const std::string& strategy,
         std::uint64_t budget, unsigned workers) {
        ZetaCoefficients z;
        {
          py::gil_scoped_release release;
          z = zeta_coeffs(r, p, mom, levels, parse_strategy(strategy), enumeration(budget, workers));
        }
        if (!z.complete()) {
          throw BudgetExceeded("enumeration budget exhausted at level " +
                               std::to_string(*z.failed_level));
        }
        return to_fractions(z.coeffs);
      },
      py::arg("rep"), py::arg("p"), py::arg("levels"), py::arg("m") = 1,
      py::arg("strategy") = "auto", py::arg("budget") = EnumerationOptions{}.budget,
      py::arg("workers") = 0, "Coefficients c_0..c_levels of the ask zeta function.");

  m.def(
      "closed_form",
      [](const std::string& name, std::int64_t q, int order, long long l, long long d, long long e,
         long long r, long long mom, long long h_count) {
        FormParams fp{l, d, e, r, mom, BigInt(h_count)};
        const auto f = closed_form(name, fp, Rational(q));
        return py::make_tuple(f.to_string(), to_fractions(f.expand(static_cast<std::size_t>(order))));
      },
      py::arg("name"), py::arg("q"), py::arg("order") = 2, py::arg("l") = 1, py::arg("d") = 1,
      py::arg("e") = 1, py::arg("r") = 1, py::arg("m") = 1, py::arg("h_count") = 0,
      "(text, [c_0..c_order]) of a named closed form at numeric q.");
  m.def("closed_form_names", &closed_form_names);

  m.def(
      "make_example",
      [](const std::string& name, std::optional<long long> l, std::optional<long long> d,
         std::optional<long long> e, std::optional<long long> r) {
        return make_example(name, catalog_params(l, d, e, r));
      },
      py::arg("name"), py::arg("l") = py::none(), py::arg("d") = py::none(),
      py::arg("e") = py::none(), py::arg("r") = py::none());
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& entry : catalog_list()) names.push_back(entry.name);
    return names;
  });

  m.def(
      "class_number",
      [](const std::string& kind, const MRep& r, std::int64_t p, int n) {
        py::gil_scoped_release release;
        FiniteGroup g(parse_group_kind(kind), r, TruncatedRing(p, n));
        return class_number(g);
      },
      py::arg("kind"), py::arg("rep"), py::arg("p"), py::arg("n") = 1,
      "Number of conjugacy classes of G_alpha ('galpha'), H_theta ('htheta') or exp(L) ('lazard').");

  m.def(
      "constant_rank",
      [](const MRep& r, std::int64_t p) {
        const auto res = constant_rank_check(r, TruncatedRing(p, 1));
        return py::make_tuple(res.constant, res.rank);
      },
      py::arg("rep"), py::arg("p"), "(constant, rank) over F_p.");

  m.def(
      "kernel_size",
      [](const std::vector<std::vector<std::int64_t>>& rows, std::int64_t p, int n) {
        const TruncatedRing ring(p, n);
        const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        RingMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i) {
          if (rows[i].size() != c) throw py::value_error("ragged matrix");
          for (std::size_t j = 0; j < c; ++j) a.at(i, j) = ring.reduce(rows[i][j]);
        }
        return to_pyint(kernel_size(a, ring));
      },
      py::arg("matrix"), py::arg("p"), py::arg("n"), "#{x : x A = 0} over Z/p^n.");

  m.def(
      "run_acceptance",
      [](std::vector<int> only, std::uint64_t seed, std::size_t corpus, unsigned workers) {
        VerifyOptions opts;
        opts.seed = seed;
        opts.corpus_size = corpus;
        opts.workers = workers;
        opts.only.insert(only.begin(), only.end());
        std::vector<CriterionResult> results;
        {
          py::gil_scoped_release release;
          results = run_acceptance(opts);
        }
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["id"] = r.id;
          d["title"] = r.title;
          d["pass"] = r.pass;
          d["comparisons"] = r.comparisons;
          d["failures"] = r.failures;
          out.append(d);
        }
        return out;
      },
      py::arg("only") = std::vector<int>{}, py::arg("seed") = VerifyOptions{}.seed,
      py::arg("corpus") = VerifyOptions{}.corpus_size, py::arg("workers") = 0);
}
