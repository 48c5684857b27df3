#include "reslat/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace reslat {

using nlohmann::json;

namespace {

std::string pointer(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw SchemaError("", std::string("missing key \"") + key + "\"");
  return doc.at(key);
}

Element lookup(const std::map<std::string, Element>& index, const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected a label string");
  auto it = index.find(v.get<std::string>());
  if (it == index.end()) throw SchemaError(path, "unknown label \"" + v.get<std::string>() + "\"");
  return it->second;
}

Table<Element> read_table(const json& v, const std::string& path, std::size_t n,
                          const std::map<std::string, Element>& index) {
  if (!v.is_array() || v.size() != n) throw SchemaError(path, "expected " + std::to_string(n) + " rows");
  Table<Element> t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = v[i];
    if (!row.is_array() || row.size() != n)
      throw SchemaError(pointer(path, i), "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = lookup(index, row[j], pointer(pointer(path, i), j));
  }
  return t;
}

}  // namespace

LatticeDocument parse_lattice(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", "invalid JSON (byte " + std::to_string(e.byte) + ")");
  }
  if (!doc.is_object()) throw SchemaError("", "expected a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    static const char* known[] = {"name", "size", "labels", "order", "odot", "imp"};
    if (std::none_of(std::begin(known), std::end(known), [&](const char* k) { return it.key() == k; }))
      throw SchemaError("/" + it.key(), "unknown key");
  }

  const json& name = require(doc, "name");
  if (!name.is_string()) throw SchemaError("/name", "expected a string");
  const json& size = require(doc, "size");
  if (!size.is_number_unsigned() || size.get<std::size_t>() < 1 || size.get<std::size_t>() > kMaxElements)
    throw SchemaError("/size", "expected an integer in 1.." + std::to_string(kMaxElements));
  const std::size_t n = size.get<std::size_t>();

  const json& labels = require(doc, "labels");
  if (!labels.is_array() || labels.size() != n) throw SchemaError("/labels", "expected " + std::to_string(n) + " labels");
  std::vector<std::string> names;
  std::map<std::string, Element> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!labels[i].is_string() || labels[i].get<std::string>().empty())
      throw SchemaError(pointer("/labels", i), "expected a non-empty string");
    names.push_back(labels[i].get<std::string>());
    if (!index.emplace(names.back(), i).second) throw SchemaError(pointer("/labels", i), "duplicate label");
  }

  const json& order = require(doc, "order");
  if (!order.is_array()) throw SchemaError("/order", "expected an array of cover pairs");
  std::vector<std::pair<Element, Element>> covers;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto path = pointer("/order", i);
    if (!order[i].is_array() || order[i].size() != 2) throw SchemaError(path, "expected [lower, upper]");
    const Element lo = lookup(index, order[i][0], pointer(path, 0));
    const Element hi = lookup(index, order[i][1], pointer(path, 1));
    if (lo == hi) throw SchemaError(path, "cover pair relates an element to itself");
    covers.emplace_back(lo, hi);
  }
  // reachability first, so a cycle is reported at the pair that closes it
  Table<bool> reach(n, std::vector<bool>(n, false));
  for (auto [lo, hi] : covers) reach[lo][hi] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < covers.size(); ++i)
    if (reach[covers[i].second][covers[i].first]) throw SchemaError(pointer("/order", i), "cover pairs form a cycle");
  Table<bool> leq = order_from_covers(n, covers);

  Table<Element> odot = read_table(require(doc, "odot"), "/odot", n, index);
  LatticeTables t = complete_tables(names, std::move(leq), std::move(odot));
  if (doc.contains("imp")) {
    const Table<Element> imp = read_table(doc.at("imp"), "/imp", n, index);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (imp[i][j] != t.imp[i][j])
          throw SchemaError("/imp/" + std::to_string(i) + "/" + std::to_string(j),
                            "does not match the residuum " + names[t.imp[i][j]]);
  }
  return LatticeDocument{name.get<std::string>(), ResiduatedLattice::from_tables(std::move(t))};
}

LatticeDocument load_lattice(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice(buf.str());
}

std::string serialize_lattice(const ResiduatedLattice& l, const std::string& name, JsonStyle style) {
  const std::size_t n = l.size();
  json labels = l.labels();
  json order = json::array();
  for (Element x = 0; x < n; ++x)
    l.upper_covers(x).for_each([&](Element y) { order.push_back({l.label(x), l.label(y)}); });
  json odot = json::array();
  for (Element x = 0; x < n; ++x) {
    json row = json::array();
    for (Element y = 0; y < n; ++y) row.push_back(l.label(l.odot(x, y)));
    odot.push_back(row);
  }

  if (style == JsonStyle::compact) {
    json doc = {{"labels", labels}, {"name", name}, {"odot", odot}, {"order", order}, {"size", n}};
    return doc.dump() + "\n";
  }
  std::string out = "{\n";
  out += "  \"labels\": " + labels.dump() + ",\n";
  out += "  \"name\": " + json(name).dump() + ",\n";
  out += "  \"odot\": [\n";
  for (std::size_t i = 0; i < n; ++i) out += "    " + odot[i].dump() + (i + 1 < n ? ",\n" : "\n");
  out += "  ],\n";
  out += "  \"order\": " + order.dump() + ",\n";
  out += "  \"size\": " + std::to_string(n) + "\n";
  out += "}\n";
  return out;
}

std::string hasse_dot(const ResiduatedLattice& l, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << json(name).dump() << " {\n  rankdir=BT;\n";
  for (Element x = 0; x < l.size(); ++x) out << "  n" << x << " [label=" << json(l.label(x)).dump() << "];\n";
  for (Element x = 0; x < l.size(); ++x)
    l.upper_covers(x).for_each([&](Element y) { out << "  n" << x << " -> n" << y << ";\n"; });
  out << "}\n";
  return out.str();
}

std::string spectrum_dot(const ResiduatedLattice& l, const Spectrum& s, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << json(name + " spectrum").dump() << " {\n  rankdir=BT;\n";
  for (std::size_t p = 0; p < s.size(); ++p) {
    out << "  p" << p << " [label=" << json(l.format(s.primes[p])).dump();
    if (s.maximal.contains(p)) out << ", shape=box";
    else if (s.minimal.contains(p)) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (std::size_t p = 0; p < s.size(); ++p)
    (s.above[p] - PointSet::single(p)).for_each([&](std::size_t q) {
      // Skip q when some r sits strictly between p and q.
      const PointSet between = s.above[p] & s.below[q];
      if (between.size() == 2) out << "  p" << p << " -> p" << q << ";\n";
    });
  out << "}\n";
  return out.str();
}

}  // namespace reslat
