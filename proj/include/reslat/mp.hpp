#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reslat/coann.hpp"
#include "reslat/purity.hpp"

namespace reslat {

/// Everything the characterizations read, computed once per lattice.
struct LatticeAnalysis {
  ResiduatedLattice lattice;
  FilterLattice filters;
  Spectrum spectrum;
  SkeletonLattice skeleton;
  OmegaLattice omega;
  PureSpectrum purity;
};

LatticeAnalysis analyze(const ResiduatedLattice& l);

/// Evidence behind a verdict. `text` is always set for false verdicts.
struct Witness {
  std::string text;
  std::vector<Element> elements;
  std::vector<Filter> filters;
};

struct Verdict {
  std::string id;
  std::string family;
  std::string statement;
  bool value = true;
  Witness witness;
  /// False for checks that mp implies but that do not imply mp on finite
  /// lattices. They are reported but take no part in agreement.
  bool characterization = true;
};

struct MpReport {
  std::vector<Verdict> verdicts;
  /// Over characterizations only.
  bool agree = true;
  /// Set only when agree.
  std::optional<bool> final;

  std::size_t characterizations() const;
  /// Characterizations with the same value as the first one.
  std::size_t count_agreeing() const;
  /// First false characterization, if any.
  const Verdict* first_false() const;
};

std::vector<Verdict> mp_via_spectral(const LatticeAnalysis& a);
std::vector<Verdict> mp_via_algebraic(const LatticeAnalysis& a);
std::vector<Verdict> mp_via_quotient(const LatticeAnalysis& a);
std::vector<Verdict> mp_via_topology(const LatticeAnalysis& a);
std::vector<Verdict> mp_via_purity(const LatticeAnalysis& a);

/// Raised when the characterizations disagree. The message carries every
/// verdict and the serialized lattice.
class MpDisagreement : public ConsistencyError {
 public:
  MpDisagreement(MpReport r, const std::string& what) : ConsistencyError(what), report(std::move(r)) {}
  MpReport report;
};

struct MpOptions {
  /// Run the five families on separate threads. The report order is fixed
  /// either way.
  bool parallel = false;
  bool throw_on_disagreement = true;
};

MpReport mp_check(const LatticeAnalysis& a, const MpOptions& opt = {});
MpReport mp_check(const ResiduatedLattice& l, const MpOptions& opt = {});

/// Formats filters as "{a,1},{b,1}".
std::string format_filters(const ResiduatedLattice& l, const std::vector<Filter>& fs);

}  // namespace reslat
