#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "privword/error.hpp"
#include "privword/factor_index.hpp"
#include "privword/harness.hpp"
#include "privword/infinite_word.hpp"
#include "privword/morphism.hpp"
#include "privword/privileged.hpp"
#include "privword/recurrences.hpp"

namespace py = pybind11;
using namespace privword;

namespace {

// Words cross the boundary as display strings such as "0110".
Word w(const std::string& s) { return Word::parse(s); }

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const auto& x : ws) out.push_back(x.str());
  return out;
}

FactorIndex build_index(const std::string& name, std::size_t certified) {
  return FactorIndex::build(InfiniteWordSpec::builtin(name), certified);
}

}  // namespace

PYBIND11_MODULE(_privword, m) {
  m.doc() = "Privileged and palindromic factors of infinite words";
  m.attr("__version__") = PRIVWORD_VERSION;

  static py::exception<Error> exc(m, "PrivwordError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(exc.ptr())(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  // words
  m.def("prefix", [](const std::string& name, std::size_t n) { return InfiniteWordSpec::builtin(name).prefix(n).str(); },
        py::arg("name"), py::arg("n"), "Length-n prefix of a built-in word (tm, tm-theta, chacon, kappa, mu, h-mu).");
  m.def("fixed_point_prefix",
        [](const std::string& spec, const std::string& seed, std::size_t n) {
          if (seed.size() != 1) throw Error(ErrorCode::ParseError, "seed must be a single letter");
          return fixed_point_prefix(Morphism::parse(spec), letter_from_display(seed[0]), n).str();
        },
        py::arg("morphism"), py::arg("seed"), py::arg("n"));
  m.def("apply_morphism", [](const std::string& spec, const std::string& word) {
    return Morphism::parse(spec).apply(w(word)).str();
  });
  m.def("builtin_words", &InfiniteWordSpec::builtin_names);

  // finite-word helpers
  m.def("is_palindrome", [](const std::string& s) { return is_palindrome(w(s)); });
  m.def("is_privileged", [](const std::string& s) { return is_privileged(w(s)); });
  m.def("is_primitive", [](const std::string& s) { return is_primitive(w(s)); });
  m.def("is_rich", [](const std::string& s) { return is_rich(w(s)); });
  m.def("exchange", [](const std::string& s) { return exchange(w(s)).str(); });
  m.def("borders", [](const std::string& s) { return strs(borders(w(s))); });
  m.def("occurrence_count", [](const std::string& s, const std::string& u) { return occurrence_count(w(s), w(u)); });
  m.def("delete_ends", [](const std::string& s, std::size_t i, std::size_t j) { return delete_ends(w(s), i, j).str(); });
  m.def("longest_proper_privileged_border",
        [](const std::string& s) { return longest_proper_privileged_border(w(s)).str(); });
  m.def("defect", [](const std::string& s) {
    const auto r = defect(w(s));
    py::dict d;
    d["word"] = r.word.str();
    d["defect"] = r.defect;
    d["lacking_positions"] = r.lacking_positions;
    return d;
  });

  // indexed infinite words
  py::class_<FactorIndex>(m, "FactorIndex")
      .def(py::init(&build_index), py::arg("name"), py::arg("certified_length"))
      .def_static("of_finite", [](const std::string& s) { return FactorIndex::of_finite(w(s)); })
      .def_property_readonly("name", &FactorIndex::name)
      .def_property_readonly("certified_length", &FactorIndex::certified_length)
      .def_property_readonly("prefix_length", [](const FactorIndex& i) { return i.text().size(); })
      .def("factors",
           [](const FactorIndex& i, std::size_t n) {
             std::vector<std::string> out;
             for (const auto& f : i.factors(n)) out.push_back(f.word.str());
             return out;
           })
      .def("positions",
           [](const FactorIndex& i, const std::string& u) {
             const auto* f = i.find(w(u));
             return f ? std::vector<std::uint32_t>(f->positions) : std::vector<std::uint32_t>{};
           })
      .def("__contains__", [](const FactorIndex& i, const std::string& u) { return i.contains(w(u)); })
      .def("complete_first_returns",
           [](const FactorIndex& i, const std::string& u) { return strs(complete_first_returns(i, w(u))); })
      .def("privileged_set",
           [](const FactorIndex& i, std::size_t n, const std::string& cls) {
             return strs(privileged_set(i, n, PrefixClass::parse(cls)).members);
           },
           py::arg("n"), py::arg("cls") = "all")
      .def("oracle_complexity",
           [](const FactorIndex& i, std::size_t n, const std::string& kind, const std::string& cls) {
             return oracle_complexity(i, n, parse_complexity_kind(kind), PrefixClass::parse(cls));
           },
           py::arg("n"), py::arg("kind") = "A", py::arg("cls") = "all")
      .def("is_closed_under_reversal",
           [](const FactorIndex& i, std::size_t up_to) {
             const auto r = is_closed_under_reversal(i, up_to);
             return py::make_tuple(r.closed, r.counterexample ? py::cast(r.counterexample->str()) : py::none());
           })
      .def("interpretations", [](const FactorIndex& i, const std::string& u, const std::string& morphism) {
        std::vector<std::tuple<std::string, std::size_t, std::size_t>> out;
        for (const auto& x : interpretations(w(u), Morphism::parse(morphism), i)) {
          out.emplace_back(x.ancestor.str(), x.head_cut, x.tail_cut);
        }
        return out;
      });

  m.def("apply_reduction", [](const std::string& map, const std::string& s, const FactorIndex& i) {
    return apply_reduction(parse_reduction(map), w(s), i).str();
  });
  m.def("invert_reduction", [](const std::string& map, const std::string& s, const FactorIndex& i) {
    return invert_reduction(parse_reduction(map), w(s), i).str();
  });

  // recurrences
  m.def("A", [](Index n) { return A(n); });
  m.def("P", [](Index n) { return P(n); });
  m.def("B", [](Index n) { return B(n); });
  m.def("series", [](const std::string& s, Index n) { return recurrences().value(parse_series(s), n); },
        py::arg("series"), py::arg("n"));
  m.def("table", [](const std::string& s, Index max_n) { return recurrences().table(parse_series(s), max_n).entries; },
        py::arg("series"), py::arg("max_n"));
  m.def("a_seq", &a_seq);
  m.def("b_seq", &b_seq);
  m.def("A_pow2", &A_pow2);
  m.def("gap_interval", [](Index n) {
    const auto g = gap_interval(n);
    return py::make_tuple(g.lo, g.hi);
  });
  m.def("published_A_table", &published_A_table);

  // harness
  m.def("verify",
        [](const std::string& word, const std::string& kind, Index max_n) {
          const auto idx = build_index(word, std::max<Index>(max_n, 1));
          const auto series = kind == "all"       ? all_series()
                              : kind == "classes" ? class_series()
                                                  : std::vector<Series>{parse_series(kind)};
          const auto r = harness::verify(idx, series, max_n);
          py::list mism;
          for (const auto& x : r.mismatches) mism.append(py::make_tuple(std::string(to_string(x.series)), x.n, x.oracle, x.recurrence));
          py::dict d;
          d["word"] = r.word;
          d["max"] = r.max_n;
          d["prefix_length"] = r.prefix_length;
          d["mismatches"] = mism;
          d["pass"] = r.pass();
          return d;
        },
        py::arg("word") = "tm", py::arg("kind") = "A", py::arg("max_n") = 64);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = harness::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
