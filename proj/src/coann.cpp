#include "reslat/coann.hpp"

#include <algorithm>

namespace reslat {

Filter coannihilator(const ResiduatedLattice& l, const Spectrum& s, ElementSet x) {
  return kernel(l, s, dual_hull(s, s.all(), x));
}

namespace {

bool contains(const std::vector<Filter>& v, Filter f) { return std::find(v.begin(), v.end(), f) != v.end(); }

}  // namespace

SkeletonLattice skeleton(const ResiduatedLattice& l, const FilterLattice& fl, const Spectrum& s) {
  SkeletonLattice sk;
  for (auto f : fl.filters) sk.coannihilators.push_back(coannihilator(l, s, f));
  canonical_sort(l.size(), sk.coannihilators);
  for (Element x = 0; x < l.size(); ++x) {
    const Filter p = coannihilator(l, s, ElementSet::single(x));
    sk.perp.push_back(p);
    sk.coannulets.push_back(p);
    sk.dual_coannulets.push_back(coannihilator(l, s, p));
  }
  canonical_sort(l.size(), sk.coannulets);
  canonical_sort(l.size(), sk.dual_coannulets);

  const std::size_t k = sk.size();
  auto index = [&](Filter f) {
    auto it = std::find(sk.coannihilators.begin(), sk.coannihilators.end(), f);
    if (it == sk.coannihilators.end())
      throw ConsistencyError("skeleton: " + l.format(f) + " is not a coannihilator");
    return static_cast<std::size_t>(it - sk.coannihilators.begin());
  };
  auto perp = [&](Filter f) { return coannihilator(l, s, f); };
  const Filter unit = ElementSet::single(l.top());

  sk.skeleton_join.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      sk.skeleton_join[i * k + j] = index(perp(perp(sk.coannihilators[i]) & perp(sk.coannihilators[j])));

  for (std::size_t i = 0; i < k; ++i) {
    const Filter f = sk.coannihilators[i];
    const Filter c = perp(f);
    if (perp(c) != f) throw ConsistencyError("skeleton: coannihilator is not perp-perp closed");
    if ((f & c) != unit || sk.coannihilators[sk.skeleton_join[i * k + index(c)]] != l.all())
      throw ConsistencyError("skeleton: F-perp is not a complement of " + l.format(f));
    for (std::size_t j = 0; j < k; ++j) {
      const Filter g = sk.coannihilators[j];
      index(f & g);  // Gamma is closed under intersection.
      // De Morgan: (F v G)-perp = F-perp n G-perp.
      if (perp(sk.coannihilators[sk.skeleton_join[i * k + j]]) != (c & perp(g)))
        throw ConsistencyError("skeleton: De Morgan law fails");
    }
  }
  for (auto f : sk.coannulets)
    if (!contains(sk.coannihilators, f)) throw ConsistencyError("skeleton: coannulet outside Gamma");
  return sk;
}

BaerRickart classify_baer_rickart(const ResiduatedLattice& l, const SkeletonLattice& sk) {
  BaerRickart out;
  const std::size_t k = sk.size();
  out.baer = true;
  for (std::size_t i = 0; i < k && out.baer; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (filter_join(l, sk.coannihilators[i], sk.coannihilators[j]) !=
          sk.coannihilators[sk.skeleton_join[i * k + j]]) {
        out.baer = false;
        break;
      }

  out.coannulets_sublattice = true;
  for (auto f : sk.coannulets)
    for (auto g : sk.coannulets)
      if (!contains(sk.coannulets, filter_join(l, f, g)) || !contains(sk.coannulets, f & g))
        out.coannulets_sublattice = false;

  const Filter unit = ElementSet::single(l.top());
  out.coannulets_boolean = std::all_of(sk.coannulets.begin(), sk.coannulets.end(), [&](Filter f) {
    return std::any_of(sk.coannulets.begin(), sk.coannulets.end(),
                       [&](Filter g) { return (f & g) == unit && filter_join(l, f, g) == l.all(); });
  });
  out.rickart = out.coannulets_sublattice && out.coannulets_boolean;
  return out;
}

}  // namespace reslat
