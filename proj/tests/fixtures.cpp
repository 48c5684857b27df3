#include "fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fixtures {

std::string data_path(const std::string& file) { return std::string(RESLAT_DATA_DIR) + "/" + file; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const ResiduatedLattice& a6() {
  static const ResiduatedLattice l = load_lattice(data_path("a6.json")).lattice;
  return l;
}

const ResiduatedLattice& a8() {
  static const ResiduatedLattice l = load_lattice(data_path("a8.json")).lattice;
  return l;
}

namespace {

template <typename F>
ResiduatedLattice chain(std::size_t n, F product) {
  Table<bool> leq(n, std::vector<bool>(n));
  Table<Element> odot(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      leq[i][j] = i <= j;
      odot[i][j] = product(i, j);
    }
  return ResiduatedLattice::from_tables(complete_tables(default_labels(n), leq, odot));
}

}  // namespace

ResiduatedLattice godel_chain(std::size_t n) {
  return chain(n, [](std::size_t i, std::size_t j) { return std::min(i, j); });
}

ResiduatedLattice lukasiewicz_chain(std::size_t n) {
  return chain(n, [n](std::size_t i, std::size_t j) { return i + j >= n - 1 ? i + j - (n - 1) : 0; });
}

ResiduatedLattice boolean4() {
  Table<bool> leq = {{true, true, true, true}, {false, true, false, true}, {false, false, true, true},
                     {false, false, false, true}};
  Table<Element> odot = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  return ResiduatedLattice::from_tables(complete_tables({"0", "a", "b", "1"}, leq, odot));
}

const std::vector<ResiduatedLattice>& corpus(std::size_t n_max) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<ResiduatedLattice>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n_max);
  if (it != cache.end()) return it->second;
  std::vector<ResiduatedLattice> all;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto part = enumerate_residuated(n);
    all.insert(all.end(), part.begin(), part.end());
  }
  return cache.emplace(n_max, std::move(all)).first->second;
}

Element el(const ResiduatedLattice& l, const std::string& label) {
  auto x = l.find(label);
  if (!x) throw std::runtime_error("no element " + label);
  return *x;
}

ElementSet set_of(const ResiduatedLattice& l, const std::vector<std::string>& labels) {
  ElementSet s;
  for (const auto& x : labels) s.insert(el(l, x));
  return s;
}

std::vector<std::string> formatted(const ResiduatedLattice& l, const std::vector<Filter>& fs) {
  std::vector<std::string> out;
  for (auto f : fs) out.push_back(l.format(f));
  return out;
}

namespace {

std::string pts(PointSet p) {
  std::string s = "{";
  bool first = true;
  p.for_each([&](std::size_t i) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(i);
  });
  return s + "}";
}

std::vector<PointSet> subsets_of(PointSet points) {
  std::vector<PointSet> out;
  std::uint64_t full = points.bits();
  for (std::uint64_t b = full;; b = (b - 1) & full) {
    out.emplace_back(b);
    if (b == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::string> check_topology_bruteforce(const FiniteTopology& t, const std::vector<PointSet>& subbasis) {
  std::vector<std::string> bad;
  const PointSet points = t.points;
  // basis: finite intersections of subbasic sets
  std::vector<PointSet> basis = {points};
  for (auto s : subbasis) {
    std::vector<PointSet> more;
    for (auto b : basis) more.push_back(b & s & points);
    basis.insert(basis.end(), more.begin(), more.end());
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  }
  std::vector<PointSet> opens;
  for (auto u : subsets_of(points)) {
    PointSet cover;
    for (auto b : basis)
      if (b.subset_of(u)) cover |= b;
    if (cover == u) opens.push_back(u);
  }
  if (opens != open_sets(t)) bad.push_back("open sets differ");
  std::vector<PointSet> closed;
  for (auto u : opens) closed.push_back(points - u);
  std::sort(closed.begin(), closed.end());
  if (closed != closed_sets(t)) bad.push_back("closed sets differ");

  auto smallest_open = [&](PointSet s) {
    PointSet r = points;
    for (auto u : opens)
      if (s.subset_of(u)) r &= u;
    return r;
  };
  for (auto s : subsets_of(points)) {
    PointSet cl = points;
    for (auto c : closed)
      if (s.subset_of(c)) cl &= c;
    if (cl != closure(t, s)) bad.push_back("closure of " + pts(s));
    if (smallest_open(s) != open_hull(t, s)) bad.push_back("open hull of " + pts(s));
  }

  bool t1 = true, hausdorff = true, normal = true;
  for (auto p : points.members())
    for (auto q : points.members()) {
      if (p == q) continue;
      bool sep = false, disjoint = false;
      for (auto u : opens) {
        if (u.contains(p) && !u.contains(q)) sep = true;
        if (!u.contains(p) || u.contains(q)) continue;
        for (auto v : opens)
          if (v.contains(q) && !u.intersects(v)) disjoint = true;
      }
      t1 = t1 && sep;
      hausdorff = hausdorff && disjoint;
    }
  for (auto c1 : closed)
    for (auto c2 : closed)
      if (!c1.intersects(c2) && smallest_open(c1).intersects(smallest_open(c2))) normal = false;
  auto sep = separation_check(t);
  if (sep.t1 != t1) bad.push_back("T1 verdict");
  if (sep.hausdorff != hausdorff) bad.push_back("Hausdorff verdict");
  if (sep.normal != normal) bad.push_back("normality verdict");
  return bad;
}

std::vector<std::string> check_spectral_topologies(const ResiduatedLattice& l) {
  std::vector<std::string> bad;
  auto s = prime_filters(l);
  for (auto pi : {s.all(), s.minimal}) {
    const std::string where = pi == s.all() ? "Spec" : "Min";
    for (auto v : {Variant::hull, Variant::dual, Variant::patch}) {
      std::vector<PointSet> sub;
      for (Element x = 0; x < l.size(); ++x) {
        if (v != Variant::hull) sub.push_back(hull(s, pi, ElementSet::single(x)));
        if (v != Variant::dual) sub.push_back(dual_hull(s, pi, ElementSet::single(x)));
      }
      auto t = coannihilator_basis_topology(l, s, pi, v);
      for (auto& m : check_topology_bruteforce(t, sub))
        bad.push_back(where + "/" + std::string(to_string(v)) + ": " + m);
    }
  }
  // p inside q  <=>  q in hull-closure of p  <=>  p in dual-closure of q
  auto th = coannihilator_basis_topology(l, s, s.all(), Variant::hull);
  auto td = coannihilator_basis_topology(l, s, s.all(), Variant::dual);
  auto tp = coannihilator_basis_topology(l, s, s.all(), Variant::patch);
  for (std::size_t p = 0; p < s.size(); ++p)
    for (std::size_t q = 0; q < s.size(); ++q) {
      bool incl = s.primes[p].subset_of(s.primes[q]);
      bool a = closure(th, PointSet::single(p)).contains(q);
      bool b = closure(td, PointSet::single(q)).contains(p);
      if (incl != a || incl != b) bad.push_back("inclusion vs closures at " + std::to_string(p) + "," + std::to_string(q));
    }
  // dual-closed  <=>  patch-closed and stable under generalization
  for (auto c : subsets_of(s.all())) {
    bool stable = generalization(s, s.all(), c).subset_of(c);
    if (is_closed(td, c) != (is_closed(tp, c) && stable)) bad.push_back("dual-closed characterization at " + pts(c));
  }
  return bad;
}

Filter sigma_by_kernel(const ResiduatedLattice& l, const Spectrum& s, Filter f) {
  Filter k = l.all();
  for (std::size_t p = 0; p < s.size(); ++p) {
    bool below_hull = false;
    for (std::size_t q = 0; q < s.size(); ++q)
      if (f.subset_of(s.primes[q]) && s.primes[p].subset_of(s.primes[q])) below_hull = true;
    if (below_hull) k &= s.primes[p];
  }
  return k;
}

Filter sigma_by_perp(const ResiduatedLattice& l, const Spectrum&, Filter f) {
  Filter out;
  for (Element a = 0; a < l.size(); ++a) {
    bool comax = false;
    for (Element x : f.members())
      for (Element y = 0; y < l.size(); ++y)
        if (l.join(a, y) == l.top() && l.odot(x, y) == l.bottom()) comax = true;
    if (comax) out.insert(a);
  }
  return out;
}

namespace {

Filter intersect_all(const ResiduatedLattice& l, const std::vector<Filter>& fs) {
  Filter r = l.all();
  for (auto f : fs) r &= f;
  return r;
}

bool is_pure(const PureSpectrum& ps, Filter f) {
  return std::find(ps.pure.begin(), ps.pure.end(), f) != ps.pure.end();
}

}  // namespace

std::vector<std::string> check_mp_structure(const LatticeAnalysis& a) {
  std::vector<std::string> bad;
  const auto& l = a.lattice;
  const auto& s = a.spectrum;
  const auto& ps = a.purity;
  auto fail = [&](const std::string& what) { bad.push_back(what); };

  std::vector<Filter> maxes, mins;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (s.maximal.contains(p)) maxes.push_back(s.primes[p]);
    if (s.minimal.contains(p)) mins.push_back(s.primes[p]);
  }

  // sigma(F) is pure
  for (auto f : a.filters.filters)
    if (!is_pure(ps, sigma(l, s, f))) fail("sigma(" + l.format(f) + ") not pure");

  // proper pure F = k(Min n h(F))
  for (auto f : ps.pure) {
    if (f == l.all()) continue;
    PointSet pi = s.minimal & hull(s, s.all(), f);
    if (kernel(l, s, pi) != f) fail("pure " + l.format(f) + " is not the kernel of its minimal hull");
  }

  // pure filters = { intersection of Min n C : C dual-closed }
  {
    std::vector<Filter> from_closed;
    for (auto c : dual_closed_sets(l, s)) {
      std::vector<Filter> ms;
      (c & s.minimal).for_each([&](std::size_t p) { ms.push_back(s.primes[p]); });
      from_closed.push_back(intersect_all(l, ms));
    }
    canonical_sort(l.size(), from_closed);
    if (from_closed != ps.pure) fail("pure filters differ from minimal kernels of dual-closed sets");
  }

  // pure filters = { intersection of rho(m), m maximal containing F }
  {
    std::vector<Filter> from_rho;
    for (auto f : a.filters.filters) {
      std::vector<Filter> parts;
      for (auto m : maxes)
        if (f.subset_of(m)) parts.push_back(pure_part(l, ps, m));
      from_rho.push_back(intersect_all(l, parts));
    }
    canonical_sort(l.size(), from_rho);
    if (from_rho != ps.pure) fail("pure filters differ from intersections of pure parts");
  }

  // a-perp n F_a = {1}
  for (Element x = 0; x < l.size(); ++x) {
    Filter fa = f_sub_a(l, s, ps, x);
    if ((a.skeleton.perp[x] & fa) != ElementSet::single(l.top())) fail("perp meets F_a at " + l.label(x));
  }

  // minimal m = join of F_a over a in m
  for (auto m : mins) {
    Filter j = ElementSet::single(l.top());
    m.for_each([&](Element x) { j = filter_join(l, j, f_sub_a(l, s, ps, x)); });
    if (j != m) fail("minimal " + l.format(m) + " is not the join of its F_a");
  }

  // Spp inside Max(sigma)
  for (auto p : ps.spp)
    if (std::find(ps.purely_maximal.begin(), ps.purely_maximal.end(), p) == ps.purely_maximal.end())
      fail("purely prime " + l.format(p) + " is not purely maximal");

  if (!separation_check(ps.topology).hausdorff) fail("pure spectrum not Hausdorff");

  // Clop(Min_d) = { h(e) n Min : e Boolean }
  {
    auto t = coannihilator_basis_topology(l, s, s.minimal, Variant::dual);
    std::vector<PointSet> clop, from_beta;
    for (auto u : open_sets(t))
      if (is_closed(t, u)) clop.push_back(u);
    boolean_center(l).for_each([&](Element e) { from_beta.push_back(hull(s, s.minimal, ElementSet::single(e))); });
    std::sort(from_beta.begin(), from_beta.end());
    from_beta.erase(std::unique(from_beta.begin(), from_beta.end()), from_beta.end());
    if (clop != from_beta) fail("clopens of Min_d differ from Boolean hulls");
  }
  return bad;
}

std::vector<std::string> check_general_structure(const LatticeAnalysis& a) {
  std::vector<std::string> bad;
  const auto& l = a.lattice;
  const auto& s = a.spectrum;
  const auto& ps = a.purity;
  auto fail = [&](const std::string& what) { bad.push_back(what); };

  // proper F: A/F is a domain iff F is prime
  for (auto f : a.filters.filters) {
    if (f == l.all()) continue;
    bool prime = s.index_of(f).has_value();
    if (is_domain(quotient(l, f).lattice).domain != prime) fail("quotient domain test at " + l.format(f));
  }

  // intersection of the pure parts of the maximal filters is {1}
  {
    Filter r = l.all();
    s.maximal.for_each([&](std::size_t p) { r &= pure_part(l, ps, s.primes[p]); });
    if (r != ElementSet::single(l.top())) fail("pure parts of maximal filters meet above {1}");
  }

  // distinct pure primes are comaximal
  std::vector<Filter> pure_primes;
  for (auto p : s.primes)
    if (is_pure(ps, p)) pure_primes.push_back(p);
  for (std::size_t i = 0; i < pure_primes.size(); ++i)
    for (std::size_t j = i + 1; j < pure_primes.size(); ++j)
      if (!comaximal(l, pure_primes[i], pure_primes[j]).comaximal)
        fail("pure primes " + l.format(pure_primes[i]) + " and " + l.format(pure_primes[j]) + " not comaximal");

  // Clop(Spec_d) = { h(e) : e Boolean }
  {
    auto t = coannihilator_basis_topology(l, s, s.all(), Variant::dual);
    std::vector<PointSet> clop, from_beta;
    for (auto u : open_sets(t))
      if (is_closed(t, u)) clop.push_back(u);
    boolean_center(l).for_each([&](Element e) { from_beta.push_back(hull(s, s.all(), ElementSet::single(e))); });
    std::sort(from_beta.begin(), from_beta.end());
    from_beta.erase(std::unique(from_beta.begin(), from_beta.end()), from_beta.end());
    if (clop != from_beta) fail("clopens of Spec_d differ from Boolean hulls");
  }

  // coannulets lie in Omega
  for (auto g : a.skeleton.coannulets)
    if (std::find(a.omega.filters.begin(), a.omega.filters.end(), g) == a.omega.filters.end())
      fail("coannulet " + l.format(g) + " not an omega-filter");
  return bad;
}

}  // namespace fixtures
