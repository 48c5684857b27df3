#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reslat/filters.hpp"
#include "reslat/topology.hpp"

namespace reslat {

/// Prime filters in canonical filter order, with containment and the
/// maximal / minimal-prime flags. Point p of every spectral space is primes[p].
struct Spectrum {
  std::vector<Filter> primes;
  PointSet maximal;
  PointSet minimal;
  /// above[p] = {q | primes[p] is contained in primes[q]}; below is the converse.
  std::vector<PointSet> above;
  std::vector<PointSet> below;

  std::size_t size() const { return primes.size(); }
  PointSet all() const { return PointSet::range(primes.size()); }
  std::optional<std::size_t> index_of(Filter f) const;
};

/// Primes by the element-wise test (x v y in P implies x in P or y in P),
/// cross-checked against meet-primality in the filter lattice. Throws
/// ConsistencyError if the two tests disagree.
Spectrum prime_filters(const ResiduatedLattice& l, const FilterLattice& fl);
Spectrum prime_filters(const ResiduatedLattice& l);

/// Maximal proper filters (indices into fl.filters).
std::vector<std::size_t> maximal_filters(const ResiduatedLattice& l, const FilterLattice& fl);

/// A filter containing f, maximal among filters disjoint from c. Among
/// several such, the largest (then first in canonical order) is returned.
/// Throws ContractError unless c is non-empty, join-closed and disjoint from f.
Filter prime_avoiding(const ResiduatedLattice& l, const FilterLattice& fl, Filter f, ElementSet c);

/// h(X) = {P in pi | X inside P}; d(X) its complement in pi; k(pi) the
/// intersection of the primes in pi, or A when pi is empty.
PointSet hull(const Spectrum& s, PointSet pi, ElementSet x);
PointSet dual_hull(const Spectrum& s, PointSet pi, ElementSet x);
Filter kernel(const ResiduatedLattice& l, const Spectrum& s, PointSet pi);

/// Primes in pi containing (contained in) a member of sel.
PointSet specialization(const Spectrum& s, PointSet pi, PointSet sel);
PointSet generalization(const Spectrum& s, PointSet pi, PointSet sel);

/// Hull-kernel (h(x) closed), dual hull-kernel (h(x) open) or patch topology
/// on a subset of Spec.
FiniteTopology coannihilator_basis_topology(const ResiduatedLattice& l, const Spectrum& s, PointSet pi,
                                            Variant v);

struct Retraction {
  bool exists = false;
  /// map[p] = the unique minimal prime below p (valid when exists).
  std::vector<std::size_t> map;
  bool continuous = false;
  /// A prime containing two minimal primes, and those two.
  std::optional<std::size_t> witness;
  std::optional<std::pair<std::size_t, std::size_t>> witness_minimals;
};

Retraction retraction_check(const ResiduatedLattice& l, const Spectrum& s);

enum class ClosureKind {
  /// p ~ q iff p v q != A
  filter_join,
  /// p ~ q iff the ideal generated by (A\p) u (A\q) is not A
  ideal_join,
};

struct ClosureRelation {
  std::vector<PointSet> base;
  std::vector<PointSet> closed;
  std::vector<PointSet> classes;
  /// Each class contains exactly one minimal prime.
  bool bijective = false;
  /// Min_d -> Spec_d / relation, m -> class(m), is a homeomorphism.
  bool homeomorphism = false;
};

ClosureRelation closure_relation(const ResiduatedLattice& l, const Spectrum& s, ClosureKind kind);

/// Closed sets of Spec_d. Each is verified to equal {P | P n X empty} for an
/// explicit X and to be generalization-stable. Throws ConsistencyError otherwise.
std::vector<PointSet> dual_closed_sets(const ResiduatedLattice& l, const Spectrum& s);

/// The smallest generator of a finite filter (every filter is principal).
Element filter_generator(const ResiduatedLattice& l, Filter f);

}  // namespace reslat
