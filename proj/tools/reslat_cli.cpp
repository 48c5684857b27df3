// reslat: command-line driver. Exit codes: 0 ok / property holds, 3 mp
// fails, 1 input or usage error, 2 internal consistency error.
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "reslat/enumerate.hpp"
#include "reslat/io.hpp"
#include "reslat/mp.hpp"

using nlohmann::json;
using namespace reslat;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kConsistency = 2;
constexpr int kPropertyFails = 3;

json label_set(const ResiduatedLattice& l, ElementSet s) {
  json out = json::array();
  s.for_each([&](Element x) { out.push_back(l.label(x)); });
  return out;
}

json label_sets(const ResiduatedLattice& l, const std::vector<Filter>& fs) {
  json out = json::array();
  for (auto f : fs) out.push_back(label_set(l, f));
  return out;
}

std::vector<Filter> pick(const Spectrum& s, PointSet pts) {
  std::vector<Filter> out;
  pts.for_each([&](std::size_t p) { out.push_back(s.primes[p]); });
  return out;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_validate(const std::string& file, bool as_json) {
  try {
    const auto doc = load_lattice(file);
    if (as_json)
      print(std::cout, {{"name", doc.name}, {"size", doc.lattice.size()}, {"valid", true}, {"violations", json::array()}});
    else
      std::cout << "valid: " << doc.name << " (" << doc.lattice.size() << " elements)\n";
    return kOk;
  } catch (const AxiomError& e) {
    json violations = json::array();
    for (const auto& v : e.report.violations) violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
    if (as_json) {
      print(std::cout, {{"valid", false}, {"violations", violations}});
    } else {
      std::cout << "invalid\n";
      for (const auto& v : e.report.violations) {
        std::cout << "  " << v.axiom << ":";
        for (auto w : v.witness) std::cout << " " << w;
        std::cout << "\n";
      }
    }
    return kInputError;
  }
}

int cmd_analyze(const std::string& file, bool as_json) {
  const auto doc = load_lattice(file);
  const auto a = analyze(doc.lattice);
  const auto& l = a.lattice;
  const auto& s = a.spectrum;
  const auto br = classify_baer_rickart(l, a.skeleton);
  const auto dom = is_domain(l);
  json j = {
      {"name", doc.name},
      {"size", l.size()},
      {"filters", label_sets(l, a.filters.filters)},
      {"primes", label_sets(l, s.primes)},
      {"maximal", label_sets(l, pick(s, s.maximal))},
      {"minimal", label_sets(l, pick(s, s.minimal))},
      {"coannihilators", label_sets(l, a.skeleton.coannihilators)},
      {"coannulets", label_sets(l, a.skeleton.coannulets)},
      {"omega", label_sets(l, a.omega.filters)},
      {"pure", label_sets(l, a.purity.pure)},
      {"boolean_center", label_set(l, boolean_center(l))},
      {"domain", dom.domain},
      {"baer", br.baer},
      {"rickart", br.rickart},
  };
  if (as_json) {
    print(std::cout, j);
    return kOk;
  }
  std::cout << doc.name << ": " << l.size() << " elements\n";
  std::cout << "filters:        " << format_filters(l, a.filters.filters) << "\n";
  std::cout << "primes:         " << format_filters(l, s.primes) << "\n";
  std::cout << "maximal:        " << format_filters(l, pick(s, s.maximal)) << "\n";
  std::cout << "minimal primes: " << format_filters(l, pick(s, s.minimal)) << "\n";
  std::cout << "coannulets:     " << format_filters(l, a.skeleton.coannulets) << "\n";
  std::cout << "omega-filters:  " << format_filters(l, a.omega.filters) << "\n";
  std::cout << "pure filters:   " << format_filters(l, a.purity.pure) << "\n";
  std::cout << "domain: " << (dom.domain ? "yes" : "no");
  if (dom.witness) std::cout << " (" << l.label(dom.witness->first) << " v " << l.label(dom.witness->second) << " = 1)";
  std::cout << "\nbaer: " << (br.baer ? "yes" : "no") << "\nrickart: " << (br.rickart ? "yes" : "no") << "\n";
  return kOk;
}

json verdict_json(const ResiduatedLattice& l, const Verdict& v) {
  json w = {{"text", v.witness.text}, {"filters", label_sets(l, v.witness.filters)}};
  json els = json::array();
  for (auto e : v.witness.elements) els.push_back(l.label(e));
  w["elements"] = els;
  return {{"id", v.id},       {"family", v.family}, {"statement", v.statement}, {"value", v.value},
          {"witness", w},     {"characterization", v.characterization}};
}

int cmd_mp(const std::string& file, bool as_json, bool witness) {
  const auto doc = load_lattice(file);
  const auto a = analyze(doc.lattice);
  const auto r = mp_check(a, {.parallel = true, .throw_on_disagreement = false});
  const auto& l = a.lattice;
  if (as_json) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(l, v));
    json j = {{"name", doc.name}, {"agree", r.agree}, {"verdicts", verdicts},
              {"characterizations", r.characterizations()}, {"agreeing", r.count_agreeing()}};
    j["final"] = r.final ? json(*r.final) : json(nullptr);
    print(std::cout, j);
  } else {
    if (r.final)
      std::cout << "mp: " << (*r.final ? "true" : "false") << " (" << r.count_agreeing() << "/" << r.characterizations()
                << " characterizations agree)\n";
    else
      std::cout << "mp: undecided (" << r.count_agreeing() << "/" << r.characterizations()
                << " characterizations agree)\n";
    if (witness) {
      if (const Verdict* f = r.first_false()) std::cout << "witness: " << f->witness.text << "\n";
      for (const auto& v : r.verdicts) {
        std::cout << "  " << (v.value ? "true " : "false") << "  " << v.id << (v.characterization ? "" : " (necessary only)");
        if (!v.value) std::cout << ": " << v.witness.text;
        std::cout << "\n";
      }
    }
  }
  if (!r.agree) {
    std::cerr << "error: mp characterizations disagree\n" << serialize_lattice(l, doc.name);
    return kConsistency;
  }
  return *r.final ? kOk : kPropertyFails;
}

int cmd_pure(const std::string& file, bool as_json) {
  const auto doc = load_lattice(file);
  const auto a = analyze(doc.lattice);
  const auto& l = a.lattice;
  const auto& s = a.spectrum;
  const auto& ps = a.purity;
  json parts = json::object();
  s.maximal.for_each([&](std::size_t m) { parts[l.format(s.primes[m])] = label_set(l, pure_part(l, ps, s.primes[m])); });
  json fa = json::object();
  for (Element x = 0; x < l.size(); ++x) fa[l.label(x)] = label_set(l, f_sub_a(l, s, ps, x));
  const auto iota = iota_check(l, s, ps);
  json j = {{"name", doc.name},
            {"pure", label_sets(l, ps.pure)},
            {"purely_maximal", label_sets(l, ps.purely_maximal)},
            {"spp", label_sets(l, ps.spp)},
            {"pure_parts_of_maximal", parts},
            {"f_a", fa},
            {"iota_bijective", iota.bijective},
            {"iota_homeomorphism", iota.homeomorphism}};
  if (as_json) {
    print(std::cout, j);
    return kOk;
  }
  std::cout << "pure filters:    " << format_filters(l, ps.pure) << "\n";
  std::cout << "purely maximal:  " << format_filters(l, ps.purely_maximal) << "\n";
  std::cout << "purely prime:    " << format_filters(l, ps.spp) << "\n";
  s.maximal.for_each([&](std::size_t m) {
    std::cout << "pure part of " << l.format(s.primes[m]) << ": " << l.format(pure_part(l, ps, s.primes[m])) << "\n";
  });
  for (Element x = 0; x < l.size(); ++x) std::cout << "F_" << l.label(x) << " = " << l.format(f_sub_a(l, s, ps, x)) << "\n";
  std::cout << "identity Spp -> Min_d: " << (iota.homeomorphism ? "homeomorphism" : iota.bijective ? "bijection only" : "not a bijection")
            << "\n";
  return kOk;
}

int cmd_topology(const std::string& file, const std::string& space, const std::string& variant, bool as_json) {
  const auto doc = load_lattice(file);
  const auto& l = doc.lattice;
  const auto fl = all_filters(l);
  const auto s = prime_filters(l, fl);
  const Variant v = variant == "hull" ? Variant::hull : variant == "patch" ? Variant::patch : Variant::dual;
  const PointSet pts = space == "min" ? s.minimal : s.all();
  const auto t = coannihilator_basis_topology(l, s, pts, v);
  const auto sep = separation_check(t);
  json nbhd = json::array();
  pts.for_each([&](std::size_t p) {
    nbhd.push_back({{"point", label_set(l, s.primes[p])}, {"min_nbhd", label_sets(l, pick(s, t.min_nbhd[p]))}});
  });
  json j = {{"name", doc.name}, {"space", space},          {"variant", variant},
            {"points", nbhd},   {"t1", sep.t1},            {"hausdorff", sep.hausdorff},
            {"normal", sep.normal}};
  if (pts.size() <= 12) {
    json closed = json::array();
    for (auto c : closed_sets(t)) closed.push_back(label_sets(l, pick(s, c)));
    j["closed_sets"] = closed;
  }
  if (as_json) {
    print(std::cout, j);
    return kOk;
  }
  std::cout << space << " with the " << variant << " topology, " << pts.size() << " points\n";
  pts.for_each([&](std::size_t p) {
    std::cout << "  " << l.format(s.primes[p]) << ": smallest open set " << format_filters(l, pick(s, t.min_nbhd[p]))
              << "\n";
  });
  std::cout << "T1: " << (sep.t1 ? "yes" : "no") << "\nHausdorff: " << (sep.hausdorff ? "yes" : "no")
            << "\nnormal: " << (sep.normal ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_quotient(const std::string& file, const std::string& labels, bool as_json) {
  const auto doc = load_lattice(file);
  const auto& l = doc.lattice;
  ElementSet f;
  std::stringstream in(labels);
  for (std::string item; std::getline(in, item, ',');) {
    auto x = l.find(item);
    if (!x) throw SchemaError("", "unknown label \"" + item + "\" in --filter");
    f.insert(*x);
  }
  if (!is_filter(l, f)) throw ContractError(l.format(f) + " is not a filter");
  const auto q = quotient(l, f);
  const auto dom = is_domain(q.lattice);
  if (as_json) {
    json classes = json::array();
    for (auto c : q.classes) classes.push_back(label_set(l, c));
    print(std::cout, {{"filter", label_set(l, f)},
                      {"classes", classes},
                      {"domain", dom.domain},
                      {"quotient", json::parse(serialize_lattice(q.lattice, doc.name + "/" + l.format(f)))}});
    return kOk;
  }
  std::cout << doc.name << " / " << l.format(f) << ": " << q.classes.size() << " classes\n";
  for (auto c : q.classes) std::cout << "  " << l.format(c) << "\n";
  std::cout << "domain: " << (dom.domain ? "yes" : "no") << "\n";
  std::cout << serialize_lattice(q.lattice, doc.name + "/" + l.format(f));
  return kOk;
}

int cmd_enumerate(std::size_t size, bool census_mode, bool as_json) {
  if (!census_mode) {
    const auto all = enumerate_residuated(size);
    for (std::size_t i = 0; i < all.size(); ++i)
      std::cout << serialize_lattice(all[i], "RL" + std::to_string(size) + "." + std::to_string(i + 1),
                                     JsonStyle::compact);
    return kOk;
  }
  const auto rows = census(size);
  if (as_json) {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"order", r.order},
                     {"lattices", r.lattices},
                     {"residuated", r.residuated},
                     {"mp", r.mp},
                     {"rickart", r.rickart},
                     {"baer", r.baer},
                     {"domain", r.domain}});
    print(std::cout, out);
    return kOk;
  }
  std::cout << "n  lattices  residuated  mp  rickart  baer  domain\n";
  for (const auto& r : rows)
    std::cout << "n=" << r.order << " " << r.lattices << " " << r.residuated << " " << r.mp << " " << r.rickart << " "
              << r.baer << " " << r.domain << "\n";
  return kOk;
}

int cmd_dot(const std::string& file, const std::string& what) {
  const auto doc = load_lattice(file);
  if (what == "spec")
    std::cout << spectrum_dot(doc.lattice, prime_filters(doc.lattice), doc.name);
  else
    std::cout << hasse_dot(doc.lattice, doc.name);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze finite residuated lattices"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file;
  auto* validate = app.add_subcommand("validate", "check the axioms");
  validate->add_option("file", file)->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "filters, spectra, coannulets, pure filters");
  analyze_cmd->add_option("file", file)->required();
  bool witness = false;
  auto* mp = app.add_subcommand("mp", "decide mp by every characterization");
  mp->add_option("file", file)->required();
  mp->add_flag("--witness", witness, "print evidence for each verdict");
  auto* pure = app.add_subcommand("pure", "pure filters and the pure spectrum");
  pure->add_option("file", file)->required();
  std::string space = "spec", variant = "dual";
  auto* topology = app.add_subcommand("topology", "topologies on Spec or Min");
  topology->add_option("file", file)->required();
  topology->add_option("--space", space)->check(CLI::IsMember({"spec", "min"}));
  topology->add_option("--variant", variant)->check(CLI::IsMember({"hull", "dual", "patch"}));
  std::string filter;
  auto* quotient_cmd = app.add_subcommand("quotient", "quotient by a filter");
  quotient_cmd->add_option("file", file)->required();
  quotient_cmd->add_option("--filter", filter, "comma-separated labels")->required();
  std::size_t size = 0;
  bool census_mode = false;
  auto* enumerate = app.add_subcommand("enumerate", "all residuated lattices of one order");
  enumerate->add_option("--size", size)->required()->check(CLI::Range(std::size_t{1}, kOrderCap));
  enumerate->add_flag("--census", census_mode, "counts for every order up to --size");
  std::string what = "hasse";
  auto* dot = app.add_subcommand("dot", "Graphviz output");
  dot->add_option("file", file)->required();
  dot->add_option("--what", what)->check(CLI::IsMember({"hasse", "spec"}));
  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(file, as_json);
    if (*analyze_cmd) return cmd_analyze(file, as_json);
    if (*mp) return cmd_mp(file, as_json, witness);
    if (*pure) return cmd_pure(file, as_json);
    if (*topology) return cmd_topology(file, space, variant, as_json);
    if (*quotient_cmd) return cmd_quotient(file, filter, as_json);
    if (*enumerate) return cmd_enumerate(size, census_mode, as_json);
    if (*dot) return cmd_dot(file, what);
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return kConsistency;
  } catch (const AxiomError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& v : e.report.violations) {
      std::cerr << "  " << v.axiom << ":";
      for (auto w : v.witness) std::cerr << " " << w;
      std::cerr << "\n";
    }
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
