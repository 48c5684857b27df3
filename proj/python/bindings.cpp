#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reslat/coann.hpp"
#include "reslat/enumerate.hpp"
#include "reslat/io.hpp"
#include "reslat/mp.hpp"

namespace py = pybind11;
using namespace reslat;

namespace {

std::vector<std::string> labels_of(const ResiduatedLattice& l, ElementSet s) {
  std::vector<std::string> out;
  s.for_each([&](Element x) { out.push_back(l.label(x)); });
  return out;
}

std::vector<std::vector<std::string>> labels_of(const ResiduatedLattice& l, const std::vector<Filter>& fs) {
  std::vector<std::vector<std::string>> out;
  for (auto f : fs) out.push_back(labels_of(l, f));
  return out;
}

ElementSet from_labels(const ResiduatedLattice& l, const std::vector<std::string>& labels) {
  ElementSet s;
  for (const auto& x : labels) {
    auto e = l.find(x);
    if (!e) throw py::value_error("unknown label " + x);
    s.insert(*e);
  }
  return s;
}

std::vector<Filter> pick(const Spectrum& s, PointSet pts) {
  std::vector<Filter> out;
  pts.for_each([&](std::size_t p) { out.push_back(s.primes[p]); });
  return out;
}

Element element(const ResiduatedLattice& l, const std::string& label) {
  auto e = l.find(label);
  if (!e) throw py::value_error("unknown label " + label);
  return *e;
}

}  // namespace

PYBIND11_MODULE(_reslat, m) {
  m.doc() = "Finite residuated lattices: filters, spectra, pure filters and the mp property";
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<AxiomError>(m, "AxiomError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  py::class_<ResiduatedLattice>(m, "Lattice")
      .def_property_readonly("size", &ResiduatedLattice::size)
      .def_property_readonly("labels", &ResiduatedLattice::labels)
      .def_property_readonly("bottom", [](const ResiduatedLattice& l) { return l.label(l.bottom()); })
      .def_property_readonly("top", [](const ResiduatedLattice& l) { return l.label(l.top()); })
      .def("leq", [](const ResiduatedLattice& l, const std::string& x, const std::string& y) {
        return l.leq(element(l, x), element(l, y));
      })
      .def("join", [](const ResiduatedLattice& l, const std::string& x, const std::string& y) {
        return l.label(l.join(element(l, x), element(l, y)));
      })
      .def("meet", [](const ResiduatedLattice& l, const std::string& x, const std::string& y) {
        return l.label(l.meet(element(l, x), element(l, y)));
      })
      .def("odot", [](const ResiduatedLattice& l, const std::string& x, const std::string& y) {
        return l.label(l.odot(element(l, x), element(l, y)));
      })
      .def("imp", [](const ResiduatedLattice& l, const std::string& x, const std::string& y) {
        return l.label(l.imp(element(l, x), element(l, y)));
      })
      .def("serialize", [](const ResiduatedLattice& l, const std::string& name) { return serialize_lattice(l, name); },
           py::arg("name") = "lattice")
      .def("__repr__", [](const ResiduatedLattice& l) { return "<Lattice " + l.format(l.all()) + ">"; });

  py::class_<LatticeDocument>(m, "Document")
      .def_readonly("name", &LatticeDocument::name)
      .def_readonly("lattice", &LatticeDocument::lattice);

  m.def("parse_lattice", &parse_lattice, py::arg("text"));
  m.def("load_lattice", &load_lattice, py::arg("path"));

  m.def("filters", [](const ResiduatedLattice& l) { return labels_of(l, all_filters(l).filters); });
  m.def("spectrum", [](const ResiduatedLattice& l) {
    const auto s = prime_filters(l);
    py::dict d;
    d["primes"] = labels_of(l, s.primes);
    d["maximal"] = labels_of(l, pick(s, s.maximal));
    d["minimal"] = labels_of(l, pick(s, s.minimal));
    return d;
  });
  m.def("coannihilator", [](const ResiduatedLattice& l, const std::vector<std::string>& x) {
    return labels_of(l, coannihilator(l, prime_filters(l), from_labels(l, x)));
  });
  m.def("sigma", [](const ResiduatedLattice& l, const std::vector<std::string>& f) {
    const ElementSet s = from_labels(l, f);
    if (!is_filter(l, s)) throw py::value_error("not a filter");
    return labels_of(l, sigma(l, prime_filters(l), s));
  });
  m.def("pure_filters", [](const ResiduatedLattice& l) {
    const auto a = analyze(l);
    py::dict d;
    d["pure"] = labels_of(l, a.purity.pure);
    d["purely_maximal"] = labels_of(l, a.purity.purely_maximal);
    d["spp"] = labels_of(l, a.purity.spp);
    return d;
  });
  m.def("is_domain", [](const ResiduatedLattice& l) { return is_domain(l).domain; });
  m.def("mp_check", [](const ResiduatedLattice& l) {
    const auto r = mp_check(l, {.parallel = false, .throw_on_disagreement = false});
    py::list verdicts;
    for (const auto& v : r.verdicts) {
      py::dict d;
      d["id"] = v.id;
      d["family"] = v.family;
      d["value"] = v.value;
      d["witness"] = v.witness.text;
      d["characterization"] = v.characterization;
      verdicts.append(d);
    }
    py::dict d;
    d["agree"] = r.agree;
    d["final"] = r.final ? py::object(py::bool_(*r.final)) : py::object(py::none());
    d["verdicts"] = verdicts;
    return d;
  });
  m.def("enumerate", &enumerate_residuated, py::arg("n"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("naive_oracle", &naive_oracle, py::arg("n"));
  m.def("canonical_key", &canonical_key);
  m.def("census", [](std::size_t n) {
    py::list out;
    for (const auto& r : census(n)) {
      py::dict d;
      d["order"] = r.order;
      d["lattices"] = r.lattices;
      d["residuated"] = r.residuated;
      d["mp"] = r.mp;
      d["rickart"] = r.rickart;
      d["baer"] = r.baer;
      d["domain"] = r.domain;
      out.append(d);
    }
    return out;
  });
}
