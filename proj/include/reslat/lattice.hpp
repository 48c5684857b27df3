#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reslat/errors.hpp"
#include "reslat/small_set.hpp"

namespace reslat {

template <typename T>
using Table = std::vector<std::vector<T>>;

/// Raw operation tables of a candidate residuated lattice, as read from a file
/// or produced by a generator. Nothing here is trusted until validated.
struct LatticeTables {
  std::vector<std::string> labels;
  Table<bool> leq;
  Table<Element> join;
  Table<Element> meet;
  Table<Element> odot;
  Table<Element> imp;
  Element bottom = 0;
  Element top = 0;

  std::size_t size() const { return labels.size(); }
};

struct Violation {
  std::string axiom;
  std::vector<Element> witness;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  const Violation* find(const std::string& axiom) const;
};

/// Checks every residuated-lattice axiom exhaustively. Each violated axiom is
/// reported once, with the lexicographically least witness tuple. Throws
/// StructuralError when the tables are not all n x n or hold indices >= n.
ValidationReport validate_axioms(const LatticeTables& t);

/// Thrown by derive_residuum when max{a | x.a <= y} does not exist.
class ResiduumError : public std::runtime_error {
 public:
  ResiduumError(Element x, Element y, const std::string& what)
      : std::runtime_error(what), x(x), y(y) {}
  Element x;
  Element y;
};

/// Thrown when tables fail the axioms; carries the full report.
class AxiomError : public std::runtime_error {
 public:
  explicit AxiomError(ValidationReport r);
  ValidationReport report;
};

/// imp(x,y) = join of {a | odot(x,a) <= y}. The join must lie in the set.
Table<Element> derive_residuum(const Table<bool>& leq, const Table<Element>& join,
                               const Table<Element>& odot);

/// Least upper / greatest lower bound tables of a finite partial order.
/// Throws StructuralError when the order is not a lattice.
struct LatticeOps {
  Table<Element> join;
  Table<Element> meet;
  Element bottom;
  Element top;
};
LatticeOps lattice_ops_from_order(const Table<bool>& leq);

/// Reflexive-transitive closure of a cover relation on n points.
Table<bool> order_from_covers(std::size_t n, const std::vector<std::pair<Element, Element>>& covers);

/// Fills join/meet/bounds from leq and imp from odot. Throws StructuralError
/// or ResiduumError.
LatticeTables complete_tables(std::vector<std::string> labels, Table<bool> leq, Table<Element> odot);

/// A finite residuated lattice with validated tables. Immutable.
class ResiduatedLattice {
 public:
  /// Validates and takes ownership. Throws StructuralError or AxiomError.
  static ResiduatedLattice from_tables(LatticeTables t);

  std::size_t size() const { return n_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  const std::string& label(Element x) const { return tables_.labels[x]; }
  const std::vector<std::string>& labels() const { return tables_.labels; }
  std::optional<Element> find(const std::string& label) const;

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  Element join(Element x, Element y) const { return join_[x * n_ + y]; }
  Element meet(Element x, Element y) const { return meet_[x * n_ + y]; }
  Element odot(Element x, Element y) const { return odot_[x * n_ + y]; }
  Element imp(Element x, Element y) const { return imp_[x * n_ + y]; }
  Element neg(Element x) const { return imp(x, bottom_); }

  ElementSet all() const { return ElementSet::range(n_); }
  /// {y | x <= y}
  ElementSet up(Element x) const { return up_[x]; }
  /// {y | y <= x}
  ElementSet down(Element x) const { return down_[x]; }
  /// Elements covering x, and covered by x.
  ElementSet upper_covers(Element x) const { return upper_covers_[x]; }
  ElementSet lower_covers(Element x) const { return lower_covers_[x]; }
  /// Up-closure of a set.
  ElementSet up_closure(ElementSet s) const;

  const LatticeTables& tables() const { return tables_; }

  /// Formats a set as {a,b,1} using labels in index order.
  std::string format(ElementSet s) const;

 private:
  ResiduatedLattice() = default;

  std::size_t n_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  LatticeTables tables_;
  std::vector<Element> join_, meet_, odot_, imp_;
  std::vector<ElementSet> up_, down_, upper_covers_, lower_covers_;
};

/// x is in the Boolean center when x v -x = 1 and x.x = x.
ElementSet boolean_center(const ResiduatedLattice& l);

}  // namespace reslat
