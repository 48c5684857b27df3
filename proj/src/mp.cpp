#include "reslat/mp.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "reslat/io.hpp"

namespace reslat {

LatticeAnalysis analyze(const ResiduatedLattice& l) {
  auto fl = all_filters(l);
  auto s = prime_filters(l, fl);
  auto sk = skeleton(l, fl, s);
  auto om = omega_lattice(l);
  auto ps = pure_filters(l, fl, s);
  return LatticeAnalysis{l, std::move(fl), std::move(s), std::move(sk), std::move(om), std::move(ps)};
}

std::size_t MpReport::characterizations() const {
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.characterization; }));
}

std::size_t MpReport::count_agreeing() const {
  const Verdict* first = nullptr;
  std::size_t n = 0;
  for (const auto& v : verdicts) {
    if (!v.characterization) continue;
    if (!first) first = &v;
    n += v.value == first->value;
  }
  return n;
}

const Verdict* MpReport::first_false() const {
  for (const auto& v : verdicts)
    if (v.characterization && !v.value) return &v;
  return nullptr;
}

std::string format_filters(const ResiduatedLattice& l, const std::vector<Filter>& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? "," : "") + l.format(fs[i]);
  return out;
}

namespace {

bool contains(const std::vector<Filter>& v, Filter f) { return std::find(v.begin(), v.end(), f) != v.end(); }

Verdict make(const char* id, const char* family, const char* statement) {
  Verdict v;
  v.id = id;
  v.family = family;
  v.statement = statement;
  return v;
}

void fail(Verdict& v, std::string text, std::vector<Element> elements = {}, std::vector<Filter> filters = {}) {
  if (!v.value) return;  // keep the first witness
  v.value = false;
  v.witness = Witness{std::move(text), std::move(elements), std::move(filters)};
}

std::vector<Filter> minimal_list(const Spectrum& s, PointSet pts) {
  std::vector<Filter> out;
  pts.for_each([&](std::size_t p) { out.push_back(s.primes[p]); });
  return out;
}

const std::string& lab(const ResiduatedLattice& l, Element x) { return l.label(x); }

std::string prime_kind(const Spectrum& s, std::size_t p) { return s.maximal.contains(p) ? "maximal " : "prime "; }

// Pairs (x, y), x <= y by index, with x v y = 1 and neither equal to 1,
// greatest first.
std::vector<std::pair<Element, Element>> pairwise_elements(const ResiduatedLattice& l) {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = l.size(); x-- > 0;)
    for (Element y = l.size(); y-- > x;)
      if (l.join(x, y) == l.top()) out.emplace_back(x, y);
  return out;
}

// Conormality of a finite family of filters closed under n and join:
// F n G = {1} implies U n F = V n G = {1} and U v V = A for some U, V.
void conormal(const ResiduatedLattice& l, const std::vector<Filter>& family, Verdict& v) {
  const Filter unit = ElementSet::single(l.top());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i; j < family.size(); ++j) {
      const Filter f = family[i], g = family[j];
      if ((f & g) != unit) continue;
      bool found = false;
      for (auto u : family) {
        if ((u & f) != unit) continue;
        for (auto w : family)
          if ((w & g) == unit && filter_join(l, u, w) == l.all()) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found)
        fail(v, l.format(f) + " n " + l.format(g) + " = {1} but no comaximal pair annihilates them", {}, {f, g});
    }
}

// Brute-force search for any continuous map Spec_d -> Min_d fixing Min.
bool any_continuous_retraction(const ResiduatedLattice& l, const Spectrum& s) {
  const auto spec_d = coannihilator_basis_topology(l, s, s.all(), Variant::dual);
  const auto min_d = coannihilator_basis_topology(l, s, s.minimal, Variant::dual);
  const auto mins = s.minimal.members();
  const auto rest = (s.all() - s.minimal).members();
  std::vector<std::size_t> map(s.size(), 0);
  for (auto m : mins) map[m] = m;
  std::vector<std::size_t> choice(rest.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < rest.size(); ++i) map[rest[i]] = mins[choice[i]];
    if (is_continuous(spec_d, min_d, map)) return true;
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == mins.size()) choice[i++] = 0;
    if (i == choice.size()) return false;
  }
}

}  // namespace

std::vector<Verdict> mp_via_spectral(const LatticeAnalysis& a) {
  const auto& l = a.lattice;
  const auto& s = a.spectrum;
  auto unique = make("spectral.unique_minimal", "spectral", "every prime filter contains a unique minimal prime");
  for (std::size_t p = 0; p < s.size(); ++p) {
    const PointSet mins = s.below[p] & s.minimal;
    if (mins.size() != 1) {
      const auto ms = minimal_list(s, mins);
      fail(unique, prime_kind(s, p) + l.format(s.primes[p]) + " contains minimal primes " + format_filters(l, ms), {},
           [&] {
             std::vector<Filter> fs{s.primes[p]};
             fs.insert(fs.end(), ms.begin(), ms.end());
             return fs;
           }());
    }
  }

  auto comax = make("spectral.minimal_comaximal", "spectral", "distinct minimal primes are comaximal");
  const auto mins = s.minimal.members();
  for (std::size_t i = 0; i < mins.size(); ++i)
    for (std::size_t j = i + 1; j < mins.size(); ++j) {
      const Filter m = s.primes[mins[i]], n = s.primes[mins[j]];
      const Filter join = filter_join(l, m, n);
      if (join != l.all())
        fail(comax, "minimal primes " + l.format(m) + " and " + l.format(n) + " join to " + l.format(join), {},
             {m, n, join});
    }

  auto d_prime = make("spectral.d_prime", "spectral", "D(p) is prime for every prime p");
  auto d_max = make("spectral.d_maximal_prime", "spectral", "D(m) is prime for every maximal m");
  for (std::size_t p = 0; p < s.size(); ++p) {
    const Filter d = d_of_prime(l, s, s.primes[p]);
    if (s.index_of(d)) continue;
    const std::string text = "D(" + l.format(s.primes[p]) + ") = " + l.format(d) + " is not prime";
    fail(d_prime, text, {}, {s.primes[p], d});
    if (s.maximal.contains(p)) fail(d_max, text, {}, {s.primes[p], d});
  }
  return {unique, comax, d_prime, d_max};
}

std::vector<Verdict> mp_via_algebraic(const LatticeAnalysis& a) {
  const auto& l = a.lattice;
  const auto& perp = a.skeleton.perp;
  const auto pairs = pairwise_elements(l);

  auto c5 = make("algebraic.pairwise_perp_comaximal", "algebraic", "x v y = 1 implies x-perp v y-perp = A");
  auto c6 = make("algebraic.negation_witness", "algebraic", "x v y = 1 implies some a in x-perp has -a in y-perp");
  for (auto [x, y] : pairs) {
    const Filter join = filter_join(l, perp[x], perp[y]);
    if (join != l.all())
      fail(c5,
           lab(l, x) + " v " + lab(l, y) + " = 1 but " + lab(l, x) + "-perp v " + lab(l, y) + "-perp = " + l.format(join),
           {x, y}, {perp[x], perp[y], join});
    bool found = false;
    perp[x].for_each([&](Element e) { found = found || perp[y].contains(l.neg(e)); });
    if (!found)
      fail(c6, lab(l, x) + " v " + lab(l, y) + " = 1 but no a in " + l.format(perp[x]) + " has -a in " +
                   l.format(perp[y]),
           {x, y}, {perp[x], perp[y]});
  }

  auto c7 = make("algebraic.perp_join", "algebraic", "(x v y)-perp = x-perp v y-perp");
  auto c8 = make("algebraic.perp_top", "algebraic", "(x v y)-perp = A implies x-perp v y-perp = A");
  for (Element x = l.size(); x-- > 0;)
    for (Element y = l.size(); y-- > x;) {
      const Filter lhs = perp[l.join(x, y)];
      const Filter rhs = filter_join(l, perp[x], perp[y]);
      if (lhs != rhs)
        fail(c7, "(" + lab(l, x) + " v " + lab(l, y) + ")-perp = " + l.format(lhs) + " but the join is " + l.format(rhs),
             {x, y}, {lhs, rhs});
      if (lhs == l.all() && rhs != l.all())
        fail(c8, "(" + lab(l, x) + " v " + lab(l, y) + ")-perp = A but the join is " + l.format(rhs), {x, y}, {rhs});
    }

  auto conormal_f = make("algebraic.conormal_filters", "algebraic", "the filter lattice is conormal");
  conormal(l, a.filters.filters, conormal_f);
  auto conormal_pf = make("algebraic.conormal_principal", "algebraic", "the principal filter lattice is conormal");
  std::vector<Filter> principal;
  for (Element x = 0; x < l.size(); ++x) principal.push_back(principal_filter(l, x));
  canonical_sort(l.size(), principal);
  conormal(l, principal, conormal_pf);

  const auto& om = a.omega;
  auto om1 = make("algebraic.omega_join_top", "algebraic", "F omega-join G = A implies F v G = A on Omega");
  for (std::size_t i = 0; i < om.size(); ++i)
    for (std::size_t j = i; j < om.size(); ++j) {
      const Filter f = om.filters[i], g = om.filters[j];
      if (om.filters[om.omega_join[i * om.size() + j]] != l.all()) continue;
      const Filter join = filter_join(l, f, g);
      if (join != l.all())
        fail(om1, l.format(f) + " and " + l.format(g) + " have omega-join A but join " + l.format(join), {},
             {f, g, join});
    }

  auto om3 = make("algebraic.omega_join_closed", "algebraic", "Omega is closed under joins of filters");
  auto om4 = make("algebraic.omega_frame", "algebraic", "(Omega; n, v) is a frame");
  if (!contains(om.filters, ElementSet::single(l.top())))
    fail(om3, "the empty join {1} is not in Omega", {}, {ElementSet::single(l.top())});
  Filter everything = ElementSet::single(l.top());
  for (auto f : om.filters) everything = filter_join(l, everything, f);
  if (!contains(om.filters, everything))
    fail(om3, "the join of all of Omega, " + l.format(everything) + ", is not in Omega", {}, {everything});
  for (auto f : om.filters)
    for (auto g : om.filters) {
      const Filter join = filter_join(l, f, g);
      if (!contains(om.filters, join)) {
        fail(om3, l.format(f) + " v " + l.format(g) + " = " + l.format(join) + " is not in Omega", {}, {f, g, join});
        fail(om4, "not closed under v: " + l.format(f) + " v " + l.format(g) + " = " + l.format(join), {},
             {f, g, join});
      }
      if (!contains(om.filters, f & g)) fail(om4, "not closed under n: " + l.format(f) + " n " + l.format(g), {}, {f, g});
      for (auto h : om.filters)
        if ((f & filter_join(l, g, h)) != filter_join(l, f & g, f & h))
          fail(om4, "distributivity fails at " + format_filters(l, {f, g, h}), {}, {f, g, h});
    }

  auto gamma = make("algebraic.coannulet_lattice", "algebraic", "(gamma; n, v) is a lattice of filters");
  const auto& cs = a.skeleton.coannulets;
  for (auto f : cs)
    for (auto g : cs) {
      const Filter join = filter_join(l, f, g);
      if (!contains(cs, join))
        fail(gamma, l.format(f) + " v " + l.format(g) + " = " + l.format(join) + " is not a coannulet", {}, {f, g, join});
      if (!contains(cs, f & g)) fail(gamma, l.format(f) + " n " + l.format(g) + " is not a coannulet", {}, {f, g});
    }
  return {c5, c6, c7, c8, conormal_f, conormal_pf, om1, om3, om4, gamma};
}

std::vector<Verdict> mp_via_quotient(const LatticeAnalysis& a) {
  const auto& l = a.lattice;
  const auto& s = a.spectrum;
  auto primes = make("quotient.domain_primes", "quotient", "A/D(p) is a domain for every prime p");
  auto maxes = make("quotient.domain_maximals", "quotient", "A/D(m) is a domain for every maximal m");
  for (std::size_t p = 0; p < s.size(); ++p) {
    const Filter d = d_of_prime(l, s, s.primes[p]);
    const Quotient q = quotient(l, d);
    const DomainCheck dc = is_domain(q.lattice);
    if (dc.domain) continue;
    const auto [x, y] = *dc.witness;
    const std::string text = "A/" + l.format(d) + " (from " + l.format(s.primes[p]) + ") is not a domain: [" +
                             q.lattice.label(x) + "] v [" + q.lattice.label(y) + "] = [1]";
    fail(primes, text, {}, {s.primes[p], d});
    if (s.maximal.contains(p)) fail(maxes, text, {}, {s.primes[p], d});
  }
  return {primes, maxes};
}

std::vector<Verdict> mp_via_topology(const LatticeAnalysis& a) {
  const auto& l = a.lattice;
  const auto& s = a.spectrum;
  const auto spec_d = coannihilator_basis_topology(l, s, s.all(), Variant::dual);
  const auto min_d = coannihilator_basis_topology(l, s, s.minimal, Variant::dual);

  // Min_d is T1, hence discrete, on every finite lattice: implied by mp but
  // not equivalent to it (A8 is a counterexample).
  auto haus = make("topology.min_hausdorff", "topology", "Min_d is Hausdorff");
  haus.characterization = false;
  const auto sep_min = separation_check(min_d);
  if (!sep_min.hausdorff) {
    const auto [p, q] = *sep_min.hausdorff_witness;
    fail(haus, "minimal primes " + l.format(s.primes[p]) + " and " + l.format(s.primes[q]) + " cannot be separated",
         {}, {s.primes[p], s.primes[q]});
  }

  auto hull_closed = make("topology.hull_closed", "topology", "h(m) is closed in Spec_d for every minimal m");
  s.minimal.for_each([&](std::size_t m) {
    const PointSet h = hull(s, s.all(), s.primes[m]);
    if (!is_closed(spec_d, h))
      fail(hull_closed, "h(" + l.format(s.primes[m]) + ") is not closed in Spec_d", {}, {s.primes[m]});
  });

  auto retract = make("topology.retraction", "topology", "Min_d is a retract of Spec_d");
  if (!any_continuous_retraction(l, s)) {
    const auto r = retraction_check(l, s);
    std::string text = "no continuous map Spec_d -> Min_d fixes Min";
    if (r.witness) text += "; " + l.format(s.primes[*r.witness]) + " lies above two minimal primes";
    fail(retract, text);
  }

  auto normal = make("topology.spec_normal", "topology", "Spec_d is normal");
  const auto sep_spec = separation_check(spec_d);
  if (!sep_spec.normal) {
    const auto [p, q] = *sep_spec.normal_witness;
    fail(normal,
         "closures of " + l.format(s.primes[p]) + " and " + l.format(s.primes[q]) +
             " are disjoint but their neighbourhoods meet",
         {}, {s.primes[p], s.primes[q]});
  }

  std::vector<Verdict> out{haus, hull_closed, retract, normal};
  const std::pair<ClosureKind, const char*> kinds[] = {{ClosureKind::filter_join, "i"}, {ClosureKind::ideal_join, "j"}};
  for (auto [kind, name] : kinds) {
    const auto rel = closure_relation(l, s, kind);
    const std::string n = name;
    auto eq = make(n == "i" ? "topology.i_closure" : "topology.j_closure", "topology",
                   n == "i" ? "i-closure(m) = h(m) for every minimal m" : "j-closure(m) = h(m) for every minimal m");
    s.minimal.for_each([&](std::size_t m) {
      const PointSet h = hull(s, s.all(), s.primes[m]);
      if (rel.closed[m] != h) {
        const PointSet extra = rel.closed[m] - h;
        std::string text = n + "-closure(" + l.format(s.primes[m]) + ") != h(" + l.format(s.primes[m]) + ")";
        if (!extra.empty()) text += "; it contains " + l.format(s.primes[extra.first()]);
        fail(eq, text, {}, {s.primes[m]});
      }
    });
    auto homeo = make(n == "i" ? "topology.i_homeomorphism" : "topology.j_homeomorphism", "topology",
                      n == "i" ? "Min_d -> Spec_d / i-closure is a homeomorphism"
                               : "Min_d -> Spec_d / j-closure is a homeomorphism");
    if (!rel.bijective || !rel.homeomorphism) {
      std::string text = rel.bijective ? "the induced bijection is not bicontinuous" : "";
      if (!rel.bijective)
        for (auto c : rel.classes)
          if ((c & s.minimal).size() != 1) {
            text = "class " + format_filters(l, minimal_list(s, c)) + " holds " +
                   std::to_string((c & s.minimal).size()) + " minimal primes";
            break;
          }
      fail(homeo, text);
    }
    out.push_back(eq);
    out.push_back(homeo);
  }
  return out;
}

std::vector<Verdict> mp_via_purity(const LatticeAnalysis& a) {
  const auto& l = a.lattice;
  const auto& s = a.spectrum;
  const auto& ps = a.purity;

  auto omega_pure = make("purity.omega_pure", "purity", "every omega-filter is pure");
  for (auto f : a.omega.filters)
    if (!contains(ps.pure, f))
      fail(omega_pure, l.format(f) + " is an omega-filter with sigma = " + l.format(sigma(l, s, f)), {}, {f});

  auto gamma_pure = make("purity.coannulet_pure", "purity", "every coannulet is pure");
  for (Element x = 0; x < l.size(); ++x) {
    const Filter f = a.skeleton.perp[x];
    if (!contains(ps.pure, f))
      fail(gamma_pure, lab(l, x) + "-perp = " + l.format(f) + " has sigma = " + l.format(sigma(l, s, f)), {x}, {f});
  }

  auto d_pure = make("purity.d_pure", "purity", "D(p) is pure for every prime p");
  // Necessary but not sufficient: A8 has D(m) = {1} pure and is not mp.
  auto dm_pure = make("purity.d_maximal_pure", "purity", "D(m) is pure for every maximal m");
  dm_pure.characterization = false;
  for (std::size_t p = 0; p < s.size(); ++p) {
    const Filter d = d_of_prime(l, s, s.primes[p]);
    if (contains(ps.pure, d)) continue;
    const std::string text = "D(" + l.format(s.primes[p]) + ") = " + l.format(d) + " is not pure";
    fail(d_pure, text, {}, {s.primes[p], d});
    if (s.maximal.contains(p)) fail(dm_pure, text, {}, {s.primes[p], d});
  }

  const auto mins = minimal_list(s, s.minimal);
  auto min_pure = make("purity.min_pure", "purity", "every minimal prime is pure");
  for (auto m : mins)
    if (!contains(ps.pure, m))
      fail(min_pure, "minimal prime " + l.format(m) + " has sigma = " + l.format(sigma(l, s, m)), {}, {m});

  auto sorted = [](std::vector<Filter> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto max_sigma = make("purity.min_is_max_sigma", "purity", "Min = Max(sigma)");
  if (sorted(mins) != sorted(ps.purely_maximal))
    fail(max_sigma, "Min = " + format_filters(l, mins) + " but Max(sigma) = " + format_filters(l, ps.purely_maximal), {},
         ps.purely_maximal);

  auto spp = make("purity.min_is_spp", "purity", "Min = Spp");
  if (sorted(mins) != sorted(ps.spp))
    fail(spp, "Min = " + format_filters(l, mins) + " but Spp = " + format_filters(l, ps.spp), {}, ps.spp);

  auto iota = make("purity.iota_homeomorphism", "purity", "the identity Spp -> Min_d is a homeomorphism");
  const auto ic = iota_check(l, s, ps);
  if (!ic.bijective)
    fail(iota, "Spp = " + format_filters(l, ps.spp) + " differs from Min = " + format_filters(l, mins), {}, ps.spp);
  else if (!ic.homeomorphism)
    fail(iota, "the identity Spp -> Min_d is not bicontinuous");

  return {omega_pure, gamma_pure, d_pure, dm_pure, min_pure, max_sigma, spp, iota};
}

MpReport mp_check(const LatticeAnalysis& a, const MpOptions& opt) {
  using Family = std::vector<Verdict> (*)(const LatticeAnalysis&);
  const Family families[] = {mp_via_spectral, mp_via_algebraic, mp_via_quotient, mp_via_topology, mp_via_purity};
  std::vector<std::vector<Verdict>> parts;
  if (opt.parallel) {
    std::vector<std::future<std::vector<Verdict>>> futures;
    for (auto f : families) futures.push_back(std::async(std::launch::async, f, std::cref(a)));
    for (auto& f : futures) parts.push_back(f.get());
  } else {
    for (auto f : families) parts.push_back(f(a));
  }

  MpReport r;
  for (auto& p : parts) r.verdicts.insert(r.verdicts.end(), p.begin(), p.end());
  r.agree = r.count_agreeing() == r.characterizations();
  const bool first = r.first_false() == nullptr;
  if (r.agree) {
    r.final = first;
    return r;
  }
  if (!opt.throw_on_disagreement) return r;

  std::ostringstream msg;
  msg << "mp characterizations disagree\n";
  for (const auto& v : r.verdicts)
    msg << "  " << v.id << ": " << (v.value ? "true" : "false") << (v.witness.text.empty() ? "" : " (" + v.witness.text + ")")
        << "\n";
  msg << serialize_lattice(a.lattice, "disagreement");
  throw MpDisagreement(std::move(r), msg.str());
}

MpReport mp_check(const ResiduatedLattice& l, const MpOptions& opt) { return mp_check(analyze(l), opt); }

}  // namespace reslat
