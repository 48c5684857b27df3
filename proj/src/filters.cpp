#include "reslat/filters.hpp"

#include <algorithm>
#include <map>

namespace reslat {

bool is_filter(const ResiduatedLattice& l, ElementSet s) {
  if (!s.contains(l.top())) return false;
  if (l.up_closure(s) != s) return false;
  bool closed = true;
  s.for_each([&](Element x) {
    s.for_each([&](Element y) {
      if (!s.contains(l.odot(x, y))) closed = false;
    });
  });
  return closed;
}

Filter generate_filter(const ResiduatedLattice& l, ElementSet x) {
  ElementSet products = x | ElementSet::single(l.top());
  for (bool grew = true; grew;) {
    grew = false;
    const ElementSet snapshot = products;
    snapshot.for_each([&](Element a) {
      snapshot.for_each([&](Element b) {
        const Element p = l.odot(a, b);
        if (!products.contains(p)) {
          products.insert(p);
          grew = true;
        }
      });
    });
  }
  return l.up_closure(products);
}

Filter filter_join(const ResiduatedLattice& l, Filter f, Filter g) { return generate_filter(l, f | g); }

bool canonical_less(std::size_t n, ElementSet a, ElementSet b) {
  auto rank = [n](ElementSet s) { return s.size() <= 1 ? 0 : (s.size() == n ? 2 : 1); };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  return a.members() < b.members();
}

void canonical_sort(std::size_t n, std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), [n](ElementSet a, ElementSet b) { return canonical_less(n, a, b); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::optional<std::size_t> FilterLattice::index_of(Filter f) const {
  for (std::size_t i = 0; i < filters.size(); ++i)
    if (filters[i] == f) return i;
  return std::nullopt;
}

FilterLattice all_filters(const ResiduatedLattice& l) {
  std::vector<Filter> found;
  auto add = [&](Filter f) {
    if (std::find(found.begin(), found.end(), f) == found.end()) {
      found.push_back(f);
      return true;
    }
    return false;
  };
  for (Element x = 0; x < l.size(); ++x) add(principal_filter(l, x));
  // Every filter is a finite join of principal filters.
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = found;
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j)
        grew = add(filter_join(l, snapshot[i], snapshot[j])) || grew;
  }
  canonical_sort(l.size(), found);

  FilterLattice fl;
  fl.filters = std::move(found);
  const std::size_t k = fl.filters.size();
  fl.join.resize(k * k);
  fl.meet.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto jn = fl.index_of(filter_join(l, fl.filters[i], fl.filters[j]));
      auto mt = fl.index_of(filter_meet(fl.filters[i], fl.filters[j]));
      if (!jn || !mt) throw ConsistencyError("filter lattice is not closed under join and meet");
      fl.join[i * k + j] = *jn;
      fl.meet[i * k + j] = *mt;
    }
  fl.bottom = *fl.index_of(ElementSet::single(l.top()));
  fl.top = *fl.index_of(l.all());
  return fl;
}

Comaximality comaximal(const ResiduatedLattice& l, Filter f, Filter g) {
  if (!is_filter(l, f) || !is_filter(l, g) || f == l.all() || g == l.all())
    throw ContractError("comaximal: both arguments must be proper filters");
  Comaximality out;
  out.comaximal = filter_join(l, f, g) == l.all();
  f.for_each([&](Element a) {
    g.for_each([&](Element b) {
      if (!out.product_witness && l.odot(a, b) == l.bottom()) out.product_witness = {a, b};
    });
    if (!out.negation_witness && g.contains(l.neg(a))) out.negation_witness = a;
  });
  if (out.comaximal != out.product_witness.has_value() || out.comaximal != out.negation_witness.has_value())
    throw ConsistencyError("comaximality characterizations disagree for " + l.format(f) + " and " + l.format(g));
  return out;
}

Quotient quotient(const ResiduatedLattice& l, Filter f) {
  if (!is_filter(l, f)) throw ContractError("quotient: argument is not a filter");
  const std::size_t n = l.size();
  std::vector<ElementSet> cls(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (f.contains(l.imp(a, b)) && f.contains(l.imp(b, a))) cls[a].insert(b);

  // Each class is a convex join-closed set, so its greatest member exists.
  auto greatest = [&](ElementSet c) {
    Element g = c.first();
    c.for_each([&](Element x) { g = l.join(g, x); });
    if (!c.contains(g)) throw ConsistencyError("congruence class has no greatest member");
    return g;
  };
  std::map<Element, ElementSet> by_top;
  for (Element a = 0; a < n; ++a) by_top.emplace(greatest(cls[a]), cls[a]);

  std::vector<ElementSet> classes;
  std::vector<std::size_t> class_of(n);
  std::vector<Element> rep;
  for (const auto& [g, c] : by_top) {
    c.for_each([&](Element x) { class_of[x] = classes.size(); });
    classes.push_back(c);
    rep.push_back(g);
  }
  const std::size_t m = classes.size();

  LatticeTables t;
  t.leq.assign(m, std::vector<bool>(m, false));
  t.join.assign(m, std::vector<Element>(m));
  t.meet = t.odot = t.imp = t.join;
  for (std::size_t i = 0; i < m; ++i) t.labels.push_back(l.label(rep[i]));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::optional<std::size_t> jn, mt, od, im;
      auto agree = [&](std::optional<std::size_t>& slot, std::size_t v, const char* op) {
        if (slot && *slot != v)
          throw ConsistencyError(std::string("quotient: ") + op + " is not well defined on classes");
        slot = v;
      };
      classes[i].for_each([&](Element x) {
        classes[j].for_each([&](Element y) {
          agree(jn, class_of[l.join(x, y)], "join");
          agree(mt, class_of[l.meet(x, y)], "meet");
          agree(od, class_of[l.odot(x, y)], "odot");
          agree(im, class_of[l.imp(x, y)], "imp");
        });
      });
      t.join[i][j] = *jn;
      t.meet[i][j] = *mt;
      t.odot[i][j] = *od;
      t.imp[i][j] = *im;
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t.leq[i][j] = t.join[i][j] == j;
  t.bottom = class_of[l.bottom()];
  t.top = class_of[l.top()];
  try {
    return Quotient{ResiduatedLattice::from_tables(std::move(t)), std::move(classes), std::move(class_of)};
  } catch (const AxiomError& e) {
    throw ConsistencyError(std::string("quotient is not a residuated lattice: ") + e.what());
  }
}

DomainCheck is_domain(const ResiduatedLattice& l) {
  DomainCheck out;
  const std::size_t n = l.size();
  for (Element y = n; y-- > 0 && out.domain;) {
    if (y == l.top()) continue;
    for (Element x = y; x-- > 0;) {
      if (x == l.top()) continue;
      if (l.join(x, y) == l.top()) {
        out.domain = false;
        out.witness = {x, y};
        break;
      }
    }
  }
  return out;
}

}  // namespace reslat
