#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reslat/lattice.hpp"

namespace reslat {

/// A filter is an ElementSet that is up-closed and closed under odot. The
/// alias documents intent at API boundaries.
using Filter = ElementSet;

bool is_filter(const ResiduatedLattice& l, ElementSet s);

/// Least filter containing x: the up-closure of the odot-closure of x and 1.
Filter generate_filter(const ResiduatedLattice& l, ElementSet x);
inline Filter principal_filter(const ResiduatedLattice& l, Element x) {
  return generate_filter(l, ElementSet::single(x));
}

inline Filter filter_meet(Filter f, Filter g) { return f & g; }
Filter filter_join(const ResiduatedLattice& l, Filter f, Filter g);

/// All filters with their lattice operations, in canonical order.
struct FilterLattice {
  std::vector<Filter> filters;
  /// join[i * k + j] is the index of filters[i] v filters[j]; meet likewise.
  std::vector<std::size_t> join;
  std::vector<std::size_t> meet;
  std::size_t bottom = 0;  ///< {1}
  std::size_t top = 0;     ///< A

  std::size_t size() const { return filters.size(); }
  std::optional<std::size_t> index_of(Filter f) const;
  std::size_t join_index(std::size_t i, std::size_t j) const { return join[i * size() + j]; }
  std::size_t meet_index(std::size_t i, std::size_t j) const { return meet[i * size() + j]; }
};

FilterLattice all_filters(const ResiduatedLattice& l);

/// Canonical order for lists of subsets of an n-element carrier: singletons
/// first, the whole carrier last, everything else by the increasing list of
/// member indices. On a canonical document this lists {1} first and A last.
bool canonical_less(std::size_t n, ElementSet a, ElementSet b);
/// Sorts and removes duplicates.
void canonical_sort(std::size_t n, std::vector<ElementSet>& sets);

struct Comaximality {
  bool comaximal = false;
  /// f in F, g in G with f.g = 0.
  std::optional<std::pair<Element, Element>> product_witness;
  /// a in F with -a in G.
  std::optional<Element> negation_witness;
};

/// F v G = A for proper filters F, G. Throws ContractError when either input
/// is not a proper filter.
Comaximality comaximal(const ResiduatedLattice& l, Filter f, Filter g);

/// Quotient by the congruence a ~ b iff a->b and b->a lie in F.
struct Quotient {
  /// The induced residuated lattice. Classes are ordered by the index of
  /// their greatest member, and each class is labelled by that member.
  ResiduatedLattice lattice;
  std::vector<ElementSet> classes;
  std::vector<std::size_t> class_of;
};

Quotient quotient(const ResiduatedLattice& l, Filter f);

struct DomainCheck {
  bool domain = true;
  /// x, y != 1 with x v y = 1; the lexicographically greatest such pair.
  std::optional<std::pair<Element, Element>> witness;
};

/// True when no two elements other than 1 join to 1.
DomainCheck is_domain(const ResiduatedLattice& l);

}  // namespace reslat
