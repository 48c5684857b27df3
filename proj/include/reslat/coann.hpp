#pragma once

#include <vector>

#include "reslat/spectra.hpp"

namespace reslat {

/// X-perp: the intersection of the primes not containing X (A if there are none).
Filter coannihilator(const ResiduatedLattice& l, const Spectrum& s, ElementSet x);

/// The Boolean lattice of coannihilators and its coannulet sublattices.
struct SkeletonLattice {
  /// Gamma: every F-perp, canonical filter order.
  std::vector<Filter> coannihilators;
  /// skeleton_join[i * k + j] indexes coannihilators: (Fi-perp n Fj-perp)-perp.
  std::vector<std::size_t> skeleton_join;
  /// gamma: {x-perp}; lambda: {x-perp-perp}. Canonical filter order.
  std::vector<Filter> coannulets;
  std::vector<Filter> dual_coannulets;
  /// perp[x] = {x}-perp, per element.
  std::vector<Filter> perp;

  std::size_t size() const { return coannihilators.size(); }
};

/// Builds Gamma, gamma and lambda, and checks that Gamma is Boolean under
/// (n, skeleton join) with complement F -> F-perp. Throws ConsistencyError if not.
SkeletonLattice skeleton(const ResiduatedLattice& l, const FilterLattice& fl, const Spectrum& s);

struct BaerRickart {
  bool baer = false;
  bool rickart = false;
  /// gamma closed under filter join (and intersection).
  bool coannulets_sublattice = false;
  /// Every coannulet has a complement among the coannulets.
  bool coannulets_boolean = false;
};

BaerRickart classify_baer_rickart(const ResiduatedLattice& l, const SkeletonLattice& sk);

}  // namespace reslat
