#pragma once

#include <string>
#include <vector>

#include "reslat/enumerate.hpp"
#include "reslat/io.hpp"
#include "reslat/mp.hpp"

namespace fixtures {

using namespace reslat;

std::string data_path(const std::string& file);
std::string read_file(const std::string& path);

const ResiduatedLattice& a6();
const ResiduatedLattice& a8();

/// n-element chain with odot = meet.
ResiduatedLattice godel_chain(std::size_t n);
/// n-element chain with truncated addition.
ResiduatedLattice lukasiewicz_chain(std::size_t n);
/// Four-element Boolean algebra {0,a,b,1}.
ResiduatedLattice boolean4();

/// Every residuated lattice of order 1..n_max, cached.
const std::vector<ResiduatedLattice>& corpus(std::size_t n_max);

ElementSet set_of(const ResiduatedLattice& l, const std::vector<std::string>& labels);
std::vector<std::string> formatted(const ResiduatedLattice& l, const std::vector<Filter>& fs);
Element el(const ResiduatedLattice& l, const std::string& label);

/// Independent closure / separation computations for a topology given by
/// its subbasis. Returns the mismatches against the library engine, empty
/// when everything agrees.
std::vector<std::string> check_topology_bruteforce(const FiniteTopology& t,
                                                   const std::vector<PointSet>& subbasis);
/// All spectral topologies of l (hull, dual, patch on Spec and Min).
std::vector<std::string> check_spectral_topologies(const ResiduatedLattice& l);

/// Consequences of mp that should hold on every mp lattice.
std::vector<std::string> check_mp_structure(const LatticeAnalysis& a);
/// Statements that hold on every residuated lattice.
std::vector<std::string> check_general_structure(const LatticeAnalysis& a);

/// sigma by its two definitions, computed here without the library's sigma.
Filter sigma_by_kernel(const ResiduatedLattice& l, const Spectrum& s, Filter f);
Filter sigma_by_perp(const ResiduatedLattice& l, const Spectrum& s, Filter f);

}  // namespace fixtures
