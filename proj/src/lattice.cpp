#include "reslat/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace reslat {

namespace {

template <typename T>
void check_square(const Table<T>& t, std::size_t n, const char* name) {
  if (t.size() != n) {
    throw StructuralError(std::string(name) + ": expected " + std::to_string(n) + " rows, got " +
                          std::to_string(t.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n) {
      throw StructuralError(std::string(name) + ": row " + std::to_string(i) + " has " +
                            std::to_string(t[i].size()) + " entries, expected " + std::to_string(n));
    }
  }
}

void check_range(const Table<Element>& t, std::size_t n, const char* name) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t[i][j] >= n) {
        throw StructuralError(std::string(name) + "[" + std::to_string(i) + "][" + std::to_string(j) +
                              "] = " + std::to_string(t[i][j]) + " is out of range");
      }
}

// Records the first witness found per axiom; callers iterate tuples in
// lexicographic order, so that witness is the least one.
class Recorder {
 public:
  void fail(const std::string& axiom, std::vector<Element> witness) {
    for (const auto& v : report_.violations)
      if (v.axiom == axiom) return;
    report_.violations.push_back({axiom, std::move(witness)});
  }
  ValidationReport take() { return std::move(report_); }

 private:
  ValidationReport report_;
};

}  // namespace

const Violation* ValidationReport::find(const std::string& axiom) const {
  for (const auto& v : violations)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

AxiomError::AxiomError(ValidationReport r)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "residuated lattice axioms violated:";
        for (const auto& v : r.violations) {
          os << ' ' << v.axiom << '(';
          for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
          os << ')';
        }
        return os.str();
      }()),
      report(std::move(r)) {}

ValidationReport validate_axioms(const LatticeTables& t) {
  const std::size_t n = t.size();
  if (n == 0) throw StructuralError("lattice must have at least one element");
  if (n > kMaxElements) throw StructuralError("lattice has more than 64 elements");
  check_square(t.leq, n, "leq");
  check_square(t.join, n, "join");
  check_square(t.meet, n, "meet");
  check_square(t.odot, n, "odot");
  check_square(t.imp, n, "imp");
  check_range(t.join, n, "join");
  check_range(t.meet, n, "meet");
  check_range(t.odot, n, "odot");
  check_range(t.imp, n, "imp");
  if (t.bottom >= n || t.top >= n) throw StructuralError("bottom/top index out of range");

  const auto& le = t.leq;
  const auto& mul = t.odot;
  Recorder rec;

  for (Element x = 0; x < n; ++x)
    if (!le[x][x]) rec.fail("order.reflexive", {x});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (x != y && le[x][y] && le[y][x]) rec.fail("order.antisymmetric", {x, y});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (le[x][y] && le[y][z] && !le[x][z]) rec.fail("order.transitive", {x, y, z});
  for (Element x = 0; x < n; ++x)
    if (!le[t.bottom][x] || !le[x][t.top]) rec.fail("order.bounds", {x});

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element j = t.join[x][y];
      bool ok = le[x][j] && le[y][j];
      for (Element z = 0; ok && z < n; ++z)
        if (le[x][z] && le[y][z] && !le[j][z]) ok = false;
      if (!ok) rec.fail("join.lub", {x, y});
    }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element m = t.meet[x][y];
      bool ok = le[m][x] && le[m][y];
      for (Element z = 0; ok && z < n; ++z)
        if (le[z][x] && le[z][y] && !le[z][m]) ok = false;
      if (!ok) rec.fail("meet.glb", {x, y});
    }

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (mul[x][y] != mul[y][x]) rec.fail("odot.commutative", {x, y});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (mul[mul[x][y]][z] != mul[x][mul[y][z]]) rec.fail("odot.associative", {x, y, z});
  for (Element x = 0; x < n; ++x)
    if (mul[x][t.top] != x || mul[t.top][x] != x) rec.fail("odot.identity", {x});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (le[y][z] && (!le[mul[x][y]][mul[x][z]] || !le[mul[y][x]][mul[z][x]]))
          rec.fail("odot.monotone", {x, y, z});
  for (Element x = 0; x < n; ++x)
    for (Element a = 0; a < n; ++a)
      for (Element y = 0; y < n; ++y)
        if (le[mul[x][a]][y] != le[a][t.imp[x][y]]) rec.fail("adjointness", {x, a, y});
  for (Element x = 0; x < n; ++x)
    if (mul[x][t.bottom] != t.bottom) rec.fail("odot.zero", {x});

  // Derived laws; a failure here always comes with an axiom failure above.
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        if (mul[x][t.join[y][z]] != t.join[mul[x][y]][mul[x][z]]) rec.fail("r1", {x, y, z});
        const Element lhs = t.join[x][mul[y][z]];
        const Element rhs = mul[t.join[x][y]][t.join[x][z]];
        if (!le[rhs][lhs]) rec.fail("r2", {x, y, z});
      }
  return rec.take();
}

Table<Element> derive_residuum(const Table<bool>& leq, const Table<Element>& join,
                               const Table<Element>& odot) {
  const std::size_t n = leq.size();
  check_square(leq, n, "leq");
  check_square(join, n, "join");
  check_square(odot, n, "odot");
  Element bottom = 0;
  bool found = false;
  for (Element b = 0; b < n && !found; ++b) {
    found = true;
    for (Element x = 0; x < n; ++x) found = found && leq[b][x];
    if (found) bottom = b;
  }
  if (!found) throw StructuralError("order has no bottom element");

  Table<Element> imp(n, std::vector<Element>(n, 0));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element acc = bottom;
      std::vector<Element> candidates;
      for (Element a = 0; a < n; ++a)
        if (leq[odot[x][a]][y]) {
          candidates.push_back(a);
          acc = join[acc][a];
        }
      if (!leq[odot[x][acc]][y]) {
        throw ResiduumError(x, y,
                            "residuum " + std::to_string(x) + "->" + std::to_string(y) +
                                " is not realized: join of candidates is not a candidate");
      }
      imp[x][y] = acc;
    }
  return imp;
}

Table<bool> order_from_covers(std::size_t n, const std::vector<std::pair<Element, Element>>& covers) {
  Table<bool> le(n, std::vector<bool>(n, false));
  for (Element i = 0; i < n; ++i) le[i][i] = true;
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw StructuralError("cover pair references an unknown element");
    le[lo][hi] = true;
  }
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (le[i][k])
        for (Element j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      if (i != j && le[i][j] && le[j][i]) throw StructuralError("cover relation contains a cycle");
  return le;
}

LatticeOps lattice_ops_from_order(const Table<bool>& leq) {
  const std::size_t n = leq.size();
  check_square(leq, n, "leq");
  if (n == 0) throw StructuralError("empty order");
  LatticeOps ops{Table<Element>(n, std::vector<Element>(n)), Table<Element>(n, std::vector<Element>(n)), 0, 0};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      std::optional<Element> lub, glb;
      for (Element z = 0; z < n; ++z) {
        if (leq[x][z] && leq[y][z]) {
          bool least = true;
          for (Element w = 0; w < n && least; ++w)
            if (leq[x][w] && leq[y][w] && !leq[z][w]) least = false;
          if (least) lub = z;
        }
        if (leq[z][x] && leq[z][y]) {
          bool greatest = true;
          for (Element w = 0; w < n && greatest; ++w)
            if (leq[w][x] && leq[w][y] && !leq[w][z]) greatest = false;
          if (greatest) glb = z;
        }
      }
      if (!lub || !glb) {
        throw StructuralError("order is not a lattice: elements " + std::to_string(x) + " and " +
                              std::to_string(y) + " lack a " + (!lub ? "join" : "meet"));
      }
      ops.join[x][y] = *lub;
      ops.meet[x][y] = *glb;
    }
  Element b = 0, t = 0;
  for (Element x = 0; x < n; ++x) {
    b = ops.meet[b][x];
    t = ops.join[t][x];
  }
  ops.bottom = b;
  ops.top = t;
  return ops;
}

LatticeTables complete_tables(std::vector<std::string> labels, Table<bool> leq, Table<Element> odot) {
  LatticeTables t;
  const std::size_t n = labels.size();
  check_square(leq, n, "leq");
  check_square(odot, n, "odot");
  check_range(odot, n, "odot");
  auto ops = lattice_ops_from_order(leq);
  t.labels = std::move(labels);
  t.imp = derive_residuum(leq, ops.join, odot);
  t.leq = std::move(leq);
  t.join = std::move(ops.join);
  t.meet = std::move(ops.meet);
  t.odot = std::move(odot);
  t.bottom = ops.bottom;
  t.top = ops.top;
  return t;
}

ResiduatedLattice ResiduatedLattice::from_tables(LatticeTables t) {
  auto report = validate_axioms(t);
  if (!report.valid()) throw AxiomError(std::move(report));
  {
    auto sorted = t.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw StructuralError("labels are not unique");
  }

  ResiduatedLattice l;
  const std::size_t n = t.size();
  l.n_ = n;
  l.bottom_ = t.bottom;
  l.top_ = t.top;
  l.join_.resize(n * n);
  l.meet_.resize(n * n);
  l.odot_.resize(n * n);
  l.imp_.resize(n * n);
  l.up_.resize(n);
  l.down_.resize(n);
  l.upper_covers_.resize(n);
  l.lower_covers_.resize(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      l.join_[x * n + y] = t.join[x][y];
      l.meet_[x * n + y] = t.meet[x][y];
      l.odot_[x * n + y] = t.odot[x][y];
      l.imp_[x * n + y] = t.imp[x][y];
      if (t.leq[x][y]) {
        l.up_[x].insert(y);
        l.down_[y].insert(x);
      }
    }
  for (Element x = 0; x < n; ++x) {
    const ElementSet strictly_above = l.up_[x] - ElementSet::single(x);
    strictly_above.for_each([&](Element y) {
      // y covers x when nothing lies strictly between them.
      if ((strictly_above & (l.down_[y] - ElementSet::single(y))).empty()) {
        l.upper_covers_[x].insert(y);
        l.lower_covers_[y].insert(x);
      }
    });
  }
  l.tables_ = std::move(t);
  return l;
}

std::optional<Element> ResiduatedLattice::find(const std::string& label) const {
  for (Element x = 0; x < n_; ++x)
    if (tables_.labels[x] == label) return x;
  return std::nullopt;
}

ElementSet ResiduatedLattice::up_closure(ElementSet s) const {
  ElementSet out;
  s.for_each([&](Element x) { out |= up_[x]; });
  return out;
}

std::string ResiduatedLattice::format(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element x) {
    if (!first) out += ',';
    out += tables_.labels[x];
    first = false;
  });
  return out + "}";
}

ElementSet boolean_center(const ResiduatedLattice& l) {
  ElementSet out;
  for (Element e = 0; e < l.size(); ++e)
    if (l.join(e, l.neg(e)) == l.top() && l.odot(e, e) == e) out.insert(e);
  return out;
}

}  // namespace reslat
