#include "reslat/purity.hpp"

#include <algorithm>

namespace reslat {

bool is_lattice_ideal(const ResiduatedLattice& l, ElementSet s) {
  if (s.empty()) return false;
  bool ok = true;
  s.for_each([&](Element x) {
    if (!l.down(x).subset_of(s)) ok = false;
    s.for_each([&](Element y) {
      if (!s.contains(l.join(x, y))) ok = false;
    });
  });
  return ok;
}

std::vector<LatticeIdeal> lattice_ideals(const ResiduatedLattice& l) {
  std::vector<LatticeIdeal> out;
  for (Element x = 0; x < l.size(); ++x) {
    if (!is_lattice_ideal(l, l.down(x))) throw ConsistencyError("principal down-set is not an ideal");
    out.push_back(l.down(x));
  }
  canonical_sort(l.size(), out);
  return out;
}

Filter omega(const ResiduatedLattice& l, ElementSet ideal) {
  Filter out;
  for (Element a = 0; a < l.size(); ++a)
    ideal.for_each([&](Element x) {
      if (l.join(a, x) == l.top()) out.insert(a);
    });
  if (!is_filter(l, out)) throw ConsistencyError("omega(" + l.format(ideal) + ") is not a filter");
  return out;
}

Filter d_of_prime(const ResiduatedLattice& l, const Spectrum& s, Filter p) {
  const auto idx = s.index_of(p);
  if (!idx) throw ContractError("D is only defined here for prime filters; " + l.format(p) + " is not prime");
  const Filter d = omega(l, l.all() - p);
  const PointSet below = generalization(s, s.all(), PointSet::single(*idx));
  if (d != kernel(l, s, below) || d != kernel(l, s, below & s.minimal))
    throw ConsistencyError("D(" + l.format(p) + ") disagrees with the kernel of its generalization");
  return d;
}

OmegaLattice omega_lattice(const ResiduatedLattice& l) {
  OmegaLattice out;
  const auto ideals = lattice_ideals(l);
  std::vector<Filter> images;
  for (auto i : ideals) images.push_back(omega(l, i));
  out.filters = images;
  canonical_sort(l.size(), out.filters);
  const std::size_t k = out.size();
  auto index = [&](Filter f) -> std::optional<std::size_t> {
    auto it = std::find(out.filters.begin(), out.filters.end(), f);
    if (it == out.filters.end()) return std::nullopt;
    return static_cast<std::size_t>(it - out.filters.begin());
  };
  out.representatives.assign(k, {});
  for (std::size_t i = 0; i < ideals.size(); ++i) out.representatives[*index(images[i])].push_back(ideals[i]);

  // The ideal join of down-sets is the down-set of the join of their tops.
  auto ideal_join = [&](ElementSet a, ElementSet b) {
    Element ta = l.bottom(), tb = l.bottom();
    a.for_each([&](Element x) { ta = l.join(ta, x); });
    b.for_each([&](Element x) { tb = l.join(tb, x); });
    return l.down(l.join(ta, tb));
  };

  out.omega_join.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::optional<Filter> value;
      for (auto ri : out.representatives[i])
        for (auto rj : out.representatives[j]) {
          const Filter v = omega(l, ideal_join(ri, rj));
          if (value && *value != v)
            throw ConsistencyError("omega join depends on representatives: " + l.format(ri) + " v " +
                                   l.format(rj));
          value = v;
        }
      auto jn = index(*value);
      auto mt = index(out.filters[i] & out.filters[j]);
      if (!jn || !mt) throw ConsistencyError("Omega is not closed under its join and intersection");
      out.omega_join[i * k + j] = *jn;
    }
  return out;
}

Filter sigma(const ResiduatedLattice& l, const Spectrum& s, Filter f) {
  const PointSet h = hull(s, s.all(), f);
  const Filter by_kernel = kernel(l, s, generalization(s, s.all(), h));
  Filter by_perp;
  for (Element a = 0; a < l.size(); ++a)
    if (filter_join(l, f, coannihilator(l, s, ElementSet::single(a))) == l.all()) by_perp.insert(a);
  if (by_kernel != by_perp)
    throw ConsistencyError("sigma(" + l.format(f) + "): kernel route " + l.format(by_kernel) +
                           " != coannulet route " + l.format(by_perp));
  return by_kernel;
}

PureSpectrum pure_filters(const ResiduatedLattice& l, const FilterLattice& fl, const Spectrum& s) {
  PureSpectrum ps;
  for (auto f : fl.filters)
    if (sigma(l, s, f) == f) ps.pure.push_back(f);

  std::vector<Filter> proper;
  for (auto f : ps.pure)
    if (f != l.all()) proper.push_back(f);
  for (auto f : proper) {
    if (std::none_of(proper.begin(), proper.end(), [&](Filter g) { return g != f && f.subset_of(g); }))
      ps.purely_maximal.push_back(f);
    bool prime = true;
    for (auto f1 : ps.pure)
      for (auto f2 : ps.pure)
        if ((f1 & f2).subset_of(f) && !f1.subset_of(f) && !f2.subset_of(f)) prime = false;
    if (prime) ps.spp.push_back(f);
  }

  std::vector<PointSet> opens;
  for (auto f : ps.pure) {
    PointSet d;
    for (std::size_t i = 0; i < ps.spp.size(); ++i)
      if (!f.subset_of(ps.spp[i])) d.insert(i);
    opens.push_back(d);
  }
  ps.topology = topology_from_subbasis(ps.spp.size(), PointSet::range(ps.spp.size()), opens, Variant::pure,
                                       Space::spp);
  return ps;
}

Filter pure_part(const ResiduatedLattice& l, const PureSpectrum& ps, Filter f) {
  Filter out = ElementSet::single(l.top());
  for (auto g : ps.pure)
    if (g.subset_of(f)) out = filter_join(l, out, g);
  if (std::find(ps.pure.begin(), ps.pure.end(), out) == ps.pure.end())
    throw ConsistencyError("pure part of " + l.format(f) + " is " + l.format(out) + ", which is not pure");
  return out;
}

Filter f_sub_a(const ResiduatedLattice& l, const Spectrum& s, const PureSpectrum& ps, Element a) {
  Filter out = l.all();
  (s.maximal & hull(s, s.all(), ElementSet::single(a))).for_each([&](std::size_t m) {
    out &= pure_part(l, ps, s.primes[m]);
  });
  return out;
}

IotaCheck iota_check(const ResiduatedLattice& l, const Spectrum& s, const PureSpectrum& ps) {
  IotaCheck out;
  std::vector<Filter> mins;
  s.minimal.for_each([&](std::size_t m) { mins.push_back(s.primes[m]); });
  auto spp = ps.spp;
  std::sort(spp.begin(), spp.end());
  std::sort(mins.begin(), mins.end());
  out.bijective = spp == mins;
  if (!out.bijective) return out;

  const auto min_d = coannihilator_basis_topology(l, s, s.minimal, Variant::dual);
  std::vector<std::size_t> forward(ps.spp.size());
  std::vector<std::size_t> backward(s.size(), 0);
  for (std::size_t i = 0; i < ps.spp.size(); ++i) {
    forward[i] = *s.index_of(ps.spp[i]);
    backward[forward[i]] = i;
  }
  out.homeomorphism = is_continuous(ps.topology, min_d, forward) && is_continuous(min_d, ps.topology, backward);
  return out;
}

}  // namespace reslat
