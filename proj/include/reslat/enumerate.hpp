#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reslat/lattice.hpp"

namespace reslat {

/// Largest order the enumerators accept.
inline constexpr std::size_t kOrderCap = 8;

/// Worker count: RESLAT_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// All bounded lattices on n elements up to isomorphism, as order matrices
/// with bottom = 0 and top = n-1, each in canonical form (least row-major
/// bit string over relabellings fixing the bounds), sorted by that string.
/// Throws ContractError for n = 0 or n > kOrderCap.
std::vector<Table<bool>> enumerate_bounded_lattices(std::size_t n);

/// Every residuated lattice on the given bounded lattice, one per orbit of
/// the lattice's automorphism group, sorted by odot table. Labels are "0",
/// "a", "b", ..., "1".
std::vector<ResiduatedLattice> extend_to_residuated(const Table<bool>& leq);

/// extend_to_residuated over enumerate_bounded_lattices(n), fanned out over
/// `threads` workers (0 = worker_count()). The output order does not depend
/// on the worker count.
std::vector<ResiduatedLattice> enumerate_residuated(std::size_t n, std::size_t threads = 0);

/// Independent brute force for n <= 4: every relation on n points that is a
/// bounded lattice, every odot table with the identity and zero rows fixed,
/// filtered by validate_axioms and deduplicated with canonical_key.
std::vector<ResiduatedLattice> naive_oracle(std::size_t n);

/// Isomorphism invariant: the least (leq, odot) string over all n!
/// relabellings. Exponential; for tests and the oracle.
std::string canonical_key(const ResiduatedLattice& l);

/// "0", "a", "b", ..., "1" for n elements ("1" alone for n = 1).
std::vector<std::string> default_labels(std::size_t n);

struct CensusRow {
  std::size_t order = 0;
  std::size_t lattices = 0;
  std::size_t residuated = 0;
  std::size_t mp = 0;
  std::size_t rickart = 0;
  std::size_t baer = 0;
  std::size_t domain = 0;
};

/// One row per order 1..n_max. Throws MpDisagreement if any lattice splits
/// the mp characterizations.
std::vector<CensusRow> census(std::size_t n_max, std::size_t threads = 0);

}  // namespace reslat
