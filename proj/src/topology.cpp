#include "reslat/topology.hpp"

#include <algorithm>

#include "reslat/errors.hpp"

namespace reslat {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::hull: return "hull";
    case Variant::dual: return "dual";
    case Variant::patch: return "patch";
    case Variant::pure: return "pure";
    case Variant::quotient: return "quotient";
  }
  return "?";
}

std::string_view to_string(Space s) {
  switch (s) {
    case Space::spec: return "spec";
    case Space::min: return "min";
    case Space::spp: return "spp";
    case Space::classes: return "classes";
  }
  return "?";
}

FiniteTopology topology_from_subbasis(std::size_t universe, PointSet points,
                                      const std::vector<PointSet>& subbasis, Variant v, Space s) {
  if (universe > kMaxElements) throw ContractError("finite space has too many points");
  FiniteTopology t{universe, points, std::vector<PointSet>(universe), v, s};
  points.for_each([&](std::size_t p) {
    PointSet nb = points;
    for (auto u : subbasis)
      if (u.contains(p)) nb &= u;
    t.min_nbhd[p] = nb;
  });
  return t;
}

FiniteTopology subspace(const FiniteTopology& t, PointSet subset, Space s) {
  FiniteTopology out{t.universe, t.points & subset, std::vector<PointSet>(t.universe), t.variant, s};
  out.points.for_each([&](std::size_t p) { out.min_nbhd[p] = t.min_nbhd[p] & out.points; });
  return out;
}

bool is_open(const FiniteTopology& t, PointSet u) {
  if (!u.subset_of(t.points)) return false;
  bool ok = true;
  u.for_each([&](std::size_t p) { ok = ok && t.min_nbhd[p].subset_of(u); });
  return ok;
}

bool is_closed(const FiniteTopology& t, PointSet c) {
  return c.subset_of(t.points) && is_open(t, t.points - c);
}

PointSet closure(const FiniteTopology& t, PointSet pi) {
  PointSet out;
  t.points.for_each([&](std::size_t q) {
    if (t.min_nbhd[q].intersects(pi)) out.insert(q);
  });
  return out;
}

PointSet open_hull(const FiniteTopology& t, PointSet pi) {
  PointSet out;
  (pi & t.points).for_each([&](std::size_t p) { out |= t.min_nbhd[p]; });
  return out;
}

namespace {

// Every subset of the points accepted by the predicate.
template <typename Closed>
void collect(const FiniteTopology& t, Closed&& accept, std::vector<PointSet>& out) {
  const auto pts = t.points.members();
  const std::size_t k = pts.size();
  if (k > 24) throw ContractError("too many points to enumerate all open sets");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    PointSet s;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) s.insert(pts[i]);
    if (accept(s)) out.push_back(s);
  }
}

}  // namespace

std::vector<PointSet> open_sets(const FiniteTopology& t) {
  std::vector<PointSet> out;
  collect(t, [&](PointSet s) { return is_open(t, s); }, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointSet> closed_sets(const FiniteTopology& t) {
  std::vector<PointSet> out;
  collect(t, [&](PointSet s) { return is_closed(t, s); }, out);
  std::sort(out.begin(), out.end());
  return out;
}

Separation separation_check(const FiniteTopology& t) {
  Separation s;
  const auto pts = t.points.members();
  for (auto p : pts)
    for (auto q : pts) {
      if (p == q) continue;
      if (s.t1 && t.min_nbhd[p].contains(q)) {
        s.t1 = false;
        s.t1_witness = {p, q};
      }
      if (p < q && s.hausdorff && t.min_nbhd[p].intersects(t.min_nbhd[q])) {
        s.hausdorff = false;
        s.hausdorff_witness = {p, q};
      }
      if (p < q && s.normal) {
        const auto cp = closure(t, PointSet::single(p));
        const auto cq = closure(t, PointSet::single(q));
        if (!cp.intersects(cq) && t.min_nbhd[p].intersects(t.min_nbhd[q])) {
          s.normal = false;
          s.normal_witness = {p, q};
        }
      }
    }
  return s;
}

bool is_continuous(const FiniteTopology& from, const FiniteTopology& to, const std::vector<std::size_t>& map) {
  bool ok = true;
  from.points.for_each([&](std::size_t p) {
    if (!to.points.contains(map[p])) {
      ok = false;
      return;
    }
    from.min_nbhd[p].for_each([&](std::size_t q) {
      if (!to.min_nbhd[map[p]].contains(map[q])) ok = false;
    });
  });
  return ok;
}

FiniteTopology quotient_space(const FiniteTopology& t, const std::vector<PointSet>& classes) {
  const std::size_t m = classes.size();
  std::vector<std::size_t> class_of(t.universe, m);
  for (std::size_t i = 0; i < m; ++i) classes[i].for_each([&](std::size_t p) { class_of[p] = i; });
  FiniteTopology out{m, PointSet::range(m), std::vector<PointSet>(m), Variant::quotient, Space::classes};
  // Smallest saturated open set containing class i, grown to a fixed point.
  for (std::size_t i = 0; i < m; ++i) {
    PointSet cls = PointSet::single(i);
    PointSet pts = classes[i];
    for (bool grew = true; grew;) {
      grew = false;
      const PointSet hull = open_hull(t, pts);
      hull.for_each([&](std::size_t p) {
        if (!cls.contains(class_of[p])) {
          cls.insert(class_of[p]);
          pts |= classes[class_of[p]];
          grew = true;
        }
      });
    }
    out.min_nbhd[i] = cls;
  }
  return out;
}

std::vector<PointSet> transitive_closure(std::vector<PointSet> rel, PointSet points) {
  points.for_each([&](std::size_t p) { rel[p].insert(p); });
  for (bool changed = true; changed;) {
    changed = false;
    auto squared = rel;
    points.for_each([&](std::size_t p) {
      rel[p].for_each([&](std::size_t q) { squared[p] |= rel[q]; });
      if (squared[p] != rel[p]) changed = true;
    });
    rel = std::move(squared);
  }
  return rel;
}

}  // namespace reslat
