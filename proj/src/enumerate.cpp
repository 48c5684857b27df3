#include "reslat/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "reslat/coann.hpp"
#include "reslat/mp.hpp"

namespace reslat {

std::size_t worker_count() {
  if (const char* env = std::getenv("RESLAT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::string> default_labels(std::size_t n) {
  if (n == 1) return {"1"};
  std::vector<std::string> out{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  out.push_back("1");
  return out;
}

namespace {

void check_order(std::size_t n, std::size_t cap) {
  if (n == 0 || n > cap)
    throw ContractError("order " + std::to_string(n) + " outside 1.." + std::to_string(cap));
}

// Runs fn(i) for i in [0, count) on up to `threads` workers. Each index is
// handled exactly once; the first exception is rethrown.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = worker_count();
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

bool is_bounded_lattice(const Table<bool>& leq) {
  const std::size_t n = leq.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      // least upper bound
      std::size_t found = n;
      for (std::size_t z = 0; z < n; ++z) {
        if (!leq[x][z] || !leq[y][z]) continue;
        if (found == n || leq[z][found]) found = z;
      }
      if (found == n) return false;
      for (std::size_t z = 0; z < n; ++z)
        if (leq[x][z] && leq[y][z] && !leq[found][z]) return false;
      found = n;
      for (std::size_t z = 0; z < n; ++z) {
        if (!leq[z][x] || !leq[z][y]) continue;
        if (found == n || leq[found][z]) found = z;
      }
      if (found == n) return false;
      for (std::size_t z = 0; z < n; ++z)
        if (leq[z][x] && leq[z][y] && !leq[z][found]) return false;
    }
  return true;
}

std::string order_string(const Table<bool>& leq, const std::vector<std::size_t>& perm) {
  // perm maps old index -> new index; read the relabelled matrix row-major.
  const std::size_t n = leq.size();
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
  std::string s(n * n, '0');
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s[a * n + b] = leq[inv[a]][inv[b]] ? '1' : '0';
  return s;
}

// Permutations fixing 0 and n-1, as old -> new maps.
template <typename F>
void for_each_interior_perm(std::size_t n, F&& f) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (n <= 2) {
    f(perm);
    return;
  }
  do {
    f(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end() - 1));
}

Table<bool> relabel(const Table<bool>& leq, const std::vector<std::size_t>& perm) {
  const std::size_t n = leq.size();
  Table<bool> out(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[perm[a]][perm[b]] = leq[a][b];
  return out;
}

class OdotSearch {
 public:
  explicit OdotSearch(const Table<bool>& leq) : leq_(leq), n_(leq.size()) {
    const auto ops = lattice_ops_from_order(leq);
    if (ops.bottom != 0 || ops.top != n_ - 1) throw ContractError("lattice must have bottom 0 and top n-1");
    join_ = ops.join;
    meet_ = ops.meet;
    for_each_interior_perm(n_, [&](const std::vector<std::size_t>& p) {
      if (relabel(leq_, p) == leq_) autos_.push_back(p);
    });
    lower_.assign(n_, {});
    upper_.assign(n_, {});
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        if (x == y || !leq_[x][y]) continue;
        bool cover = true;
        for (std::size_t z = 0; z < n_; ++z)
          if (z != x && z != y && leq_[x][z] && leq_[z][y]) cover = false;
        if (cover) {
          upper_[x].push_back(y);
          lower_[y].push_back(x);
        }
      }
    join_pairs_.assign(n_, {});
    for (std::size_t y = 0; y < n_; ++y)
      for (std::size_t z = y; z < n_; ++z) join_pairs_[join_[y][z]].emplace_back(y, z);
    for (std::size_t i = 1; i + 1 < n_; ++i)
      for (std::size_t j = i; j + 1 < n_; ++j) cells_.emplace_back(i, j);
    t_.assign(n_, std::vector<int>(n_, -1));
    const std::size_t top = n_ - 1;
    for (std::size_t x = 0; x < n_; ++x) {
      t_[x][0] = t_[0][x] = 0;
      t_[x][top] = t_[top][x] = static_cast<int>(x);
    }
  }

  std::vector<Table<Element>> run() {
    search(0);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  bool monotone_at(std::size_t x, std::size_t o) const {
    const int v = t_[x][o];
    for (auto c : lower_[x])
      if (t_[c][o] >= 0 && !leq_[t_[c][o]][v]) return false;
    for (auto u : upper_[x])
      if (t_[u][o] >= 0 && !leq_[v][t_[u][o]]) return false;
    return true;
  }

  bool distributive_at(std::size_t x, std::size_t o) const {
    const auto& row = t_[x];
    for (std::size_t z = 0; z < n_; ++z) {
      const std::size_t w = join_[o][z];
      if (row[z] >= 0 && row[w] >= 0 && static_cast<std::size_t>(row[w]) != join_[row[o]][row[z]]) return false;
    }
    for (auto [y, z] : join_pairs_[o])
      if (row[y] >= 0 && row[z] >= 0 && static_cast<std::size_t>(row[o]) != join_[row[y]][row[z]]) return false;
    return true;
  }

  bool associative() const {
    for (std::size_t x = 1; x + 1 < n_; ++x)
      for (std::size_t y = 1; y + 1 < n_; ++y) {
        const int a = t_[x][y];
        if (a < 0) continue;
        for (std::size_t z = 1; z + 1 < n_; ++z) {
          const int b = t_[y][z];
          if (b < 0) continue;
          const int l = t_[a][z], r = t_[x][b];
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  }

  bool consistent(std::size_t i, std::size_t j) const {
    return monotone_at(i, j) && monotone_at(j, i) && distributive_at(i, j) && distributive_at(j, i) && associative();
  }

  void search(std::size_t k) {
    if (k == cells_.size()) {
      record();
      return;
    }
    const auto [i, j] = cells_[k];
    const std::size_t bound = meet_[i][j];
    for (std::size_t v = 0; v < n_; ++v) {
      if (!leq_[v][bound]) continue;
      t_[i][j] = t_[j][i] = static_cast<int>(v);
      if (consistent(i, j)) search(k + 1);
    }
    t_[i][j] = t_[j][i] = -1;
  }

  void record() {
    Table<Element> table(n_, std::vector<Element>(n_));
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) table[x][y] = static_cast<Element>(t_[x][y]);
    // Keep only the least table of each automorphism orbit.
    for (const auto& p : autos_) {
      Table<Element> image(n_, std::vector<Element>(n_));
      for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y) image[p[x]][p[y]] = p[table[x][y]];
      if (image < table) return;
    }
    found_.push_back(std::move(table));
  }

  const Table<bool>& leq_;
  std::size_t n_;
  Table<Element> join_, meet_;
  std::vector<std::vector<std::size_t>> autos_;
  std::vector<std::vector<std::size_t>> lower_, upper_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> join_pairs_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::vector<std::vector<int>> t_;
  std::vector<Table<Element>> found_;
};

ResiduatedLattice build(const Table<bool>& leq, const Table<Element>& odot) {
  return ResiduatedLattice::from_tables(complete_tables(default_labels(leq.size()), leq, odot));
}

}  // namespace

std::vector<Table<bool>> enumerate_bounded_lattices(std::size_t n) {
  check_order(n, kOrderCap);
  if (n == 1) return {Table<bool>{{true}}};

  // Naturally labelled posets: interior element i sits above a down-closed
  // set of earlier elements that contains 0.
  const std::size_t interior = n - 2;
  std::vector<std::uint32_t> down(n, 0);  // strict down-sets as bitmasks
  std::set<std::string> seen;
  std::vector<std::pair<std::string, Table<bool>>> out;

  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == n - 1) {
      Table<bool> leq(n, std::vector<bool>(n, false));
      for (std::size_t x = 0; x < n; ++x) {
        leq[x][x] = true;
        leq[0][x] = true;
        leq[x][n - 1] = true;
      }
      for (std::size_t y = 1; y + 1 < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
          if (down[y] >> x & 1u) leq[x][y] = true;
      if (!is_bounded_lattice(leq)) return;
      std::string best;
      Table<bool> best_leq;
      for_each_interior_perm(n, [&](const std::vector<std::size_t>& p) {
        auto s = order_string(leq, p);
        if (best.empty() || s < best) {
          best = std::move(s);
          best_leq = relabel(leq, p);
        }
      });
      if (seen.insert(best).second) out.emplace_back(best, best_leq);
      return;
    }
    // Subsets of {1..i-1}, always with 0.
    for (std::uint32_t mask = 0; mask < (1u << (i - 1)); ++mask) {
      const std::uint32_t d = (mask << 1) | 1u;
      bool closed = true;
      for (std::size_t j = 1; j < i && closed; ++j)
        if ((d >> j & 1u) && (down[j] & ~d)) closed = false;
      if (!closed) continue;
      down[i] = d;
      place(i + 1);
    }
  };
  (void)interior;
  place(1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Table<bool>> result;
  for (auto& [s, t] : out) result.push_back(std::move(t));
  return result;
}

std::vector<ResiduatedLattice> extend_to_residuated(const Table<bool>& leq) {
  if (leq.size() == 1) return {build(leq, Table<Element>{{0}})};
  std::vector<ResiduatedLattice> out;
  for (const auto& odot : OdotSearch(leq).run()) out.push_back(build(leq, odot));
  return out;
}

std::vector<ResiduatedLattice> enumerate_residuated(std::size_t n, std::size_t threads) {
  const auto lattices = enumerate_bounded_lattices(n);
  std::vector<std::vector<ResiduatedLattice>> parts(lattices.size());
  parallel_for(lattices.size(), threads, [&](std::size_t i) { parts[i] = extend_to_residuated(lattices[i]); });
  std::vector<ResiduatedLattice> out;
  for (auto& p : parts)
    for (auto& l : p) out.push_back(std::move(l));
  return out;
}

std::string canonical_key(const ResiduatedLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::size_t> perm(n);  // new index -> old index
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> inv(n);
  std::string best, s(2 * n * n, ' ');
  do {
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        s[a * n + b] = l.leq(perm[a], perm[b]) ? '1' : '0';
        s[n * n + a * n + b] = static_cast<char>('0' + inv[l.odot(perm[a], perm[b])]);
      }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<ResiduatedLattice> naive_oracle(std::size_t n) {
  check_order(n, 4);
  std::map<std::string, ResiduatedLattice> found;
  const std::size_t bits = n * n;
  for (std::uint32_t rel = 0; rel < (1u << bits); ++rel) {
    Table<bool> leq(n, std::vector<bool>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) leq[x][y] = rel >> (x * n + y) & 1u;
    bool order = true;
    for (std::size_t x = 0; x < n && order; ++x) {
      if (!leq[x][x]) order = false;
      for (std::size_t y = 0; y < n && order; ++y) {
        if (x != y && leq[x][y] && leq[y][x]) order = false;
        for (std::size_t z = 0; z < n && order; ++z)
          if (leq[x][y] && leq[y][z] && !leq[x][z]) order = false;
      }
    }
    if (!order || !is_bounded_lattice(leq)) continue;
    std::size_t bottom = 0, top = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (std::all_of(leq[x].begin(), leq[x].end(), [](bool b) { return b; })) bottom = x;
      bool is_top = true;
      for (std::size_t y = 0; y < n; ++y) is_top = is_top && leq[y][x];
      if (is_top) top = x;
    }

    std::vector<std::pair<std::size_t, std::size_t>> free;
    Table<Element> odot(n, std::vector<Element>(n, 0));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (x == top) odot[x][y] = y;
        else if (y == top) odot[x][y] = x;
        else if (x == bottom || y == bottom) odot[x][y] = bottom;
        else free.emplace_back(x, y);
      }
    std::vector<std::string> labels(n);
    char next = 'a';
    for (std::size_t x = 0; x < n; ++x)
      labels[x] = n == 1 ? "1" : x == bottom ? "0" : x == top ? "1" : std::string(1, next++);

    std::size_t combos = 1;
    for (std::size_t i = 0; i < free.size(); ++i) combos *= n;
    for (std::size_t c = 0; c < combos; ++c) {
      std::size_t rest = c;
      for (auto [x, y] : free) {
        odot[x][y] = rest % n;
        rest /= n;
      }
      LatticeTables t;
      try {
        t = complete_tables(labels, leq, odot);
      } catch (const ResiduumError&) {
        continue;
      }
      if (!validate_axioms(t).valid()) continue;
      auto l = ResiduatedLattice::from_tables(std::move(t));
      auto key = canonical_key(l);
      found.emplace(std::move(key), std::move(l));
    }
  }
  std::vector<ResiduatedLattice> out;
  for (auto& [k, l] : found) out.push_back(std::move(l));
  return out;
}

std::vector<CensusRow> census(std::size_t n_max, std::size_t threads) {
  check_order(n_max, kOrderCap);
  std::vector<CensusRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    CensusRow row;
    row.order = n;
    row.lattices = enumerate_bounded_lattices(n).size();
    const auto all = enumerate_residuated(n, threads);
    row.residuated = all.size();
    struct Flags {
      bool mp, rickart, baer, domain;
    };
    std::vector<Flags> flags(all.size());
    parallel_for(all.size(), threads, [&](std::size_t i) {
      const auto a = analyze(all[i]);
      const auto report = mp_check(a);
      const auto br = classify_baer_rickart(a.lattice, a.skeleton);
      flags[i] = {*report.final, br.rickart, br.baer, is_domain(a.lattice).domain};
    });
    for (const auto& f : flags) {
      row.mp += f.mp;
      row.rickart += f.rickart;
      row.baer += f.baer;
      row.domain += f.domain;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace reslat
