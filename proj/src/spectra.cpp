#include "reslat/spectra.hpp"

#include <algorithm>

namespace reslat {

std::optional<std::size_t> Spectrum::index_of(Filter f) const {
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (primes[i] == f) return i;
  return std::nullopt;
}

namespace {

bool is_prime_elementwise(const ResiduatedLattice& l, Filter p) {
  if (p == l.all()) return false;
  const ElementSet outside = l.all() - p;
  bool prime = true;
  outside.for_each([&](Element x) {
    outside.for_each([&](Element y) {
      if (p.contains(l.join(x, y))) prime = false;
    });
  });
  return prime;
}

bool is_meet_prime(const FilterLattice& fl, std::size_t p) {
  if (p == fl.top) return false;
  const Filter fp = fl.filters[p];
  for (std::size_t i = 0; i < fl.size(); ++i)
    for (std::size_t j = 0; j < fl.size(); ++j)
      if (fl.filters[fl.meet_index(i, j)].subset_of(fp) && !fl.filters[i].subset_of(fp) &&
          !fl.filters[j].subset_of(fp))
        return false;
  return true;
}

}  // namespace

std::vector<std::size_t> maximal_filters(const ResiduatedLattice& l, const FilterLattice& fl) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fl.size(); ++i) {
    if (fl.filters[i] == l.all()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < fl.size() && maximal; ++j)
      if (j != i && fl.filters[j] != l.all() && fl.filters[i].subset_of(fl.filters[j])) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

Spectrum prime_filters(const ResiduatedLattice& l, const FilterLattice& fl) {
  Spectrum s;
  for (std::size_t i = 0; i < fl.size(); ++i) {
    const bool elementwise = is_prime_elementwise(l, fl.filters[i]);
    if (elementwise != is_meet_prime(fl, i))
      throw ConsistencyError("primality tests disagree on " + l.format(fl.filters[i]));
    if (elementwise) s.primes.push_back(fl.filters[i]);
  }
  const std::size_t k = s.primes.size();
  s.above.assign(k, PointSet{});
  s.below.assign(k, PointSet{});
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      if (s.primes[p].subset_of(s.primes[q])) {
        s.above[p].insert(q);
        s.below[q].insert(p);
      }
  for (std::size_t p = 0; p < k; ++p)
    if (s.below[p] == PointSet::single(p)) s.minimal.insert(p);
  for (auto m : maximal_filters(l, fl)) {
    auto idx = s.index_of(fl.filters[m]);
    if (!idx) throw ConsistencyError("maximal filter " + l.format(fl.filters[m]) + " is not prime");
    s.maximal.insert(*idx);
  }
  for (std::size_t p = 0; p < k; ++p)
    if (!s.below[p].intersects(s.minimal))
      throw ConsistencyError("prime " + l.format(s.primes[p]) + " contains no minimal prime");
  return s;
}

Spectrum prime_filters(const ResiduatedLattice& l) { return prime_filters(l, all_filters(l)); }

Filter prime_avoiding(const ResiduatedLattice& l, const FilterLattice& fl, Filter f, ElementSet c) {
  if (!is_filter(l, f)) throw ContractError("prime_avoiding: F is not a filter");
  if (c.empty()) throw ContractError("prime_avoiding: C must be non-empty");
  if (f.intersects(c)) throw ContractError("prime_avoiding: F meets C");
  c.for_each([&](Element x) {
    c.for_each([&](Element y) {
      if (!c.contains(l.join(x, y))) throw ContractError("prime_avoiding: C is not join-closed");
    });
  });
  std::vector<Filter> candidates;
  for (auto g : fl.filters)
    if (f.subset_of(g) && !g.intersects(c)) candidates.push_back(g);
  std::optional<Filter> best;
  for (auto g : candidates) {
    const bool maximal = std::none_of(candidates.begin(), candidates.end(),
                                      [&](Filter h) { return h != g && g.subset_of(h); });
    if (maximal && (!best || g.size() > best->size())) best = g;
  }
  if (!best) throw ConsistencyError("prime_avoiding: no candidate filter");
  if (!is_prime_elementwise(l, *best))
    throw ConsistencyError("prime_avoiding: maximal avoiding filter " + l.format(*best) + " is not prime");
  return *best;
}

PointSet hull(const Spectrum& s, PointSet pi, ElementSet x) {
  PointSet out;
  pi.for_each([&](std::size_t p) {
    if (x.subset_of(s.primes[p])) out.insert(p);
  });
  return out;
}

PointSet dual_hull(const Spectrum& s, PointSet pi, ElementSet x) { return pi - hull(s, pi, x); }

Filter kernel(const ResiduatedLattice& l, const Spectrum& s, PointSet pi) {
  Filter out = l.all();
  pi.for_each([&](std::size_t p) { out &= s.primes[p]; });
  return out;
}

PointSet specialization(const Spectrum& s, PointSet pi, PointSet sel) {
  PointSet out;
  sel.for_each([&](std::size_t p) { out |= s.above[p]; });
  return out & pi;
}

PointSet generalization(const Spectrum& s, PointSet pi, PointSet sel) {
  PointSet out;
  sel.for_each([&](std::size_t p) { out |= s.below[p]; });
  return out & pi;
}

FiniteTopology coannihilator_basis_topology(const ResiduatedLattice& l, const Spectrum& s, PointSet pi,
                                            Variant v) {
  std::vector<PointSet> subbasis;
  for (Element x = 0; x < l.size(); ++x) {
    const PointSet h = hull(s, pi, ElementSet::single(x));
    if (v == Variant::dual || v == Variant::patch) subbasis.push_back(h);
    if (v == Variant::hull || v == Variant::patch) subbasis.push_back(pi - h);
  }
  if (v != Variant::hull && v != Variant::dual && v != Variant::patch)
    throw ContractError("coannihilator_basis_topology: variant must be hull, dual or patch");
  const Space space = pi == s.all() ? Space::spec : (pi == s.minimal ? Space::min : Space::classes);
  return topology_from_subbasis(s.size(), pi, subbasis, v, space);
}

Retraction retraction_check(const ResiduatedLattice& l, const Spectrum& s) {
  Retraction r;
  r.map.assign(s.size(), 0);
  r.exists = true;
  for (std::size_t p = 0; p < s.size(); ++p) {
    const PointSet mins = s.below[p] & s.minimal;
    if (mins.size() != 1) {
      r.exists = false;
      r.witness = p;
      const auto m = mins.members();
      r.witness_minimals = {m[0], m[1]};
      break;
    }
    r.map[p] = mins.first();
  }
  if (!r.exists) {
    r.map.clear();
    return r;
  }
  for (std::size_t m = 0; m < s.size(); ++m)
    if (s.minimal.contains(m) && r.map[m] != m) throw ConsistencyError("retraction does not fix a minimal prime");
  const auto spec_d = coannihilator_basis_topology(l, s, s.all(), Variant::dual);
  const auto min_d = coannihilator_basis_topology(l, s, s.minimal, Variant::dual);
  r.continuous = is_continuous(spec_d, min_d, r.map);
  return r;
}

ClosureRelation closure_relation(const ResiduatedLattice& l, const Spectrum& s, ClosureKind kind) {
  const std::size_t k = s.size();
  ClosureRelation out;
  out.base.assign(k, PointSet{});
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) {
      bool related = false;
      if (kind == ClosureKind::filter_join) {
        related = filter_join(l, s.primes[p], s.primes[q]) != l.all();
      } else {
        // The complements are lattice ideals; their join contains 1 iff
        // some x outside p and y outside q have x v y = 1.
        related = true;
        const ElementSet ip = l.all() - s.primes[p];
        const ElementSet iq = l.all() - s.primes[q];
        ip.for_each([&](Element x) {
          iq.for_each([&](Element y) {
            if (l.join(x, y) == l.top()) related = false;
          });
        });
      }
      if (related) out.base[p].insert(q);
    }
  out.closed = transitive_closure(out.base, s.all());

  PointSet seen;
  for (std::size_t p = 0; p < k; ++p) {
    if (seen.contains(p)) continue;
    out.classes.push_back(out.closed[p]);
    seen |= out.closed[p];
  }

  const auto spec_d = coannihilator_basis_topology(l, s, s.all(), Variant::dual);
  const auto min_d = coannihilator_basis_topology(l, s, s.minimal, Variant::dual);
  const auto quotient = quotient_space(spec_d, out.classes);
  out.bijective = std::all_of(out.classes.begin(), out.classes.end(),
                              [&](PointSet c) { return (c & s.minimal).size() == 1; });
  if (out.bijective) {
    std::vector<std::size_t> eta(k, 0);
    std::vector<std::size_t> inverse(out.classes.size(), 0);
    for (std::size_t i = 0; i < out.classes.size(); ++i) {
      const std::size_t m = (out.classes[i] & s.minimal).first();
      eta[m] = i;
      inverse[i] = m;
    }
    out.homeomorphism = is_continuous(min_d, quotient, eta) && is_continuous(quotient, min_d, inverse);
  }
  return out;
}

Element filter_generator(const ResiduatedLattice& l, Filter f) {
  Element g = l.top();
  f.for_each([&](Element x) { g = l.odot(g, x); });
  if (!f.contains(g) || l.up_closure(ElementSet::single(g)) != f)
    throw ConsistencyError("filter " + l.format(f) + " has no least element");
  return g;
}

std::vector<PointSet> dual_closed_sets(const ResiduatedLattice& l, const Spectrum& s) {
  const auto spec_d = coannihilator_basis_topology(l, s, s.all(), Variant::dual);
  const auto patch = coannihilator_basis_topology(l, s, s.all(), Variant::patch);
  auto out = closed_sets(spec_d);
  for (auto c : out) {
    ElementSet x;
    (s.all() - c).for_each([&](std::size_t p) { x.insert(filter_generator(l, s.primes[p])); });
    PointSet avoiding;
    for (std::size_t p = 0; p < s.size(); ++p)
      if (!s.primes[p].intersects(x)) avoiding.insert(p);
    if (avoiding != c) throw ConsistencyError("dual-closed set is not of the form {P | P n X empty}");
    if (generalization(s, s.all(), c) != c || !is_closed(patch, c))
      throw ConsistencyError("dual-closed set is not patch-closed and generalization-stable");
  }
  return out;
}

}  // namespace reslat
