#pragma once

#include <vector>

#include "reslat/coann.hpp"

namespace reslat {

/// A non-empty, down-closed, join-closed subset of the lattice reduct.
using LatticeIdeal = ElementSet;

bool is_lattice_ideal(const ResiduatedLattice& l, ElementSet s);

/// All ideals of the lattice reduct in canonical order. In a finite lattice
/// each ideal is the down-set of its greatest element.
std::vector<LatticeIdeal> lattice_ideals(const ResiduatedLattice& l);

/// {a | a v x = 1 for some x in I}. Requires I join-closed; the result is
/// checked to be a filter.
Filter omega(const ResiduatedLattice& l, ElementSet ideal);

/// D(p) = omega(A \ p) for a prime p, checked against the kernel of the
/// generalization of p and of the minimal primes below p. Throws
/// ContractError for non-prime input.
Filter d_of_prime(const ResiduatedLattice& l, const Spectrum& s, Filter p);

/// Omega(A) with the join computed through representing ideals.
struct OmegaLattice {
  std::vector<Filter> filters;
  /// Ideals I with omega(I) = filters[i].
  std::vector<std::vector<LatticeIdeal>> representatives;
  /// omega_join[i * k + j] indexes filters: omega(I v J) for any representatives.
  std::vector<std::size_t> omega_join;

  std::size_t size() const { return filters.size(); }
};

/// Throws ConsistencyError when omega(I v J) depends on the choice of
/// representatives or Omega is not closed under intersection.
OmegaLattice omega_lattice(const ResiduatedLattice& l);

/// sigma(F) = k G h(F), computed also as {a | F v a-perp = A}. Throws
/// ConsistencyError if the two disagree.
Filter sigma(const ResiduatedLattice& l, const Spectrum& s, Filter f);

struct PureSpectrum {
  /// Fixed points of sigma, canonical filter order.
  std::vector<Filter> pure;
  /// Maximal proper pure filters.
  std::vector<Filter> purely_maximal;
  /// Purely-prime filters; point i of `topology` is spp[i].
  std::vector<Filter> spp;
  /// Opens are d_p(F) = {P in Spp | F not inside P}, F pure.
  FiniteTopology topology;
};

PureSpectrum pure_filters(const ResiduatedLattice& l, const FilterLattice& fl, const Spectrum& s);

/// Join of the pure filters inside F. Throws ConsistencyError if that join
/// is not itself pure.
Filter pure_part(const ResiduatedLattice& l, const PureSpectrum& ps, Filter f);

/// Intersection of the pure parts of the maximal filters containing a (A
/// when there are none).
Filter f_sub_a(const ResiduatedLattice& l, const Spectrum& s, const PureSpectrum& ps, Element a);

struct IotaCheck {
  /// Spp = Min as sets of filters.
  bool bijective = false;
  /// The identity Spp -> Min_d is continuous in both directions.
  bool homeomorphism = false;
};

IotaCheck iota_check(const ResiduatedLattice& l, const Spectrum& s, const PureSpectrum& ps);

}  // namespace reslat
