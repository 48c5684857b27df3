#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "reslat/small_set.hpp"

namespace reslat {

enum class Variant { hull, dual, patch, pure, quotient };
enum class Space { spec, min, spp, classes };

std::string_view to_string(Variant v);
std::string_view to_string(Space s);

/// A finite topological space in Alexandrov form. Points are indices
/// 0..universe-1; only members of `points` belong to the space. The open
/// sets are exactly the unions of min_nbhd values.
struct FiniteTopology {
  std::size_t universe = 0;
  PointSet points;
  /// Smallest open set containing p, for p in points; empty otherwise.
  std::vector<PointSet> min_nbhd;
  Variant variant = Variant::dual;
  Space space = Space::spec;
};

/// The topology generated by a subbasis of open sets. The smallest open set
/// around p is the intersection of the subbasic opens containing it.
FiniteTopology topology_from_subbasis(std::size_t universe, PointSet points,
                                      const std::vector<PointSet>& subbasis, Variant v, Space s);

/// Restriction to a subset of the points.
FiniteTopology subspace(const FiniteTopology& t, PointSet subset, Space s);

bool is_open(const FiniteTopology& t, PointSet u);
bool is_closed(const FiniteTopology& t, PointSet c);
/// Points whose every neighbourhood meets pi.
PointSet closure(const FiniteTopology& t, PointSet pi);
/// Smallest open set containing pi.
PointSet open_hull(const FiniteTopology& t, PointSet pi);

/// All open (closed) sets, in increasing bitmask order. Exponential in the
/// number of points.
std::vector<PointSet> open_sets(const FiniteTopology& t);
std::vector<PointSet> closed_sets(const FiniteTopology& t);

struct Separation {
  bool t1 = true;
  bool hausdorff = true;
  bool normal = true;
  std::optional<std::pair<std::size_t, std::size_t>> t1_witness;
  std::optional<std::pair<std::size_t, std::size_t>> hausdorff_witness;
  /// Points p, q with disjoint closures whose smallest neighbourhoods meet.
  std::optional<std::pair<std::size_t, std::size_t>> normal_witness;
};

/// Separation properties by preorder computations. Normality (without T1)
/// reduces to: cl(p) and cl(q) disjoint implies min_nbhd(p) and min_nbhd(q)
/// disjoint, since closed sets are unions of point closures.
Separation separation_check(const FiniteTopology& t);

/// A map f between finite spaces is continuous iff f(min_nbhd(p)) is inside
/// min_nbhd(f(p)) for every p. `map[p]` is f(p) for p in from.points.
bool is_continuous(const FiniteTopology& from, const FiniteTopology& to, const std::vector<std::size_t>& map);

/// Quotient of t by a partition of its points. Point i of the result is
/// classes[i]; a set of classes is open iff its union is open in t.
FiniteTopology quotient_space(const FiniteTopology& t, const std::vector<PointSet>& classes);

/// Reflexive-transitive closure of a relation given as successor sets over
/// `points`, by repeated squaring.
std::vector<PointSet> transitive_closure(std::vector<PointSet> rel, PointSet points);

}  // namespace reslat
