#include "qbg/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "qbg/error.hpp"
#include "qbg/lattice_path.hpp"

namespace qbg {

QExponent::QExponent(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw PreconditionError("negative exponent in q-monomial");
}

QExponent QExponent::interval(int n, int i, int j) {
  QExponent q = zero(n);
  for (int k = i; k < j; ++k) q.exps_[k - 1] = 1;
  return q;
}

bool QExponent::is_zero() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

QExponent& QExponent::operator+=(const QExponent& rhs) {
  if (rhs.exps_.size() != exps_.size()) throw PreconditionError("q-exponents of different length");
  for (std::size_t k = 0; k < exps_.size(); ++k) exps_[k] += rhs.exps_[k];
  return *this;
}

bool QExponent::divides(const QExponent& other) const {
  if (other.exps_.size() != exps_.size()) return false;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

std::string QExponent::to_monomial() const {
  std::string out;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'q' + std::to_string(k + 1);
    if (exps_[k] > 1) out += '^' + std::to_string(exps_[k]);
  }
  return out.empty() ? "1" : out;
}

std::optional<QExponent> edge_weight(const Permutation& w, const Root& t) {
  const int n = w.size();
  if (t.i < 1 || t.i >= t.j || t.j > n) throw PreconditionError("invalid root " + to_string(t));
  const int change = coxeter_length(apply_transposition(w, t)) - coxeter_length(w);
  if (change == 1) return QExponent::zero(n);
  if (change == 1 - 2 * (t.j - t.i)) return QExponent::interval(n, t.i, t.j);
  return std::nullopt;
}

// --- graph -------------------------------------------------------------------

QuantumBruhatGraph::QuantumBruhatGraph(int n) : n_(n) {
  if (n < 1) throw PreconditionError("graph size must be at least 1");
  if (n > kMaxGraphSize)
    throw ResourceError("quantum Bruhat graph for n=" + std::to_string(n) +
                        " exceeds the limit n<=" + std::to_string(kMaxGraphSize));
  vertices_ = all_permutations(n);
  std::vector<int> lengths(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) lengths[v] = coxeter_length(vertices_[v]);

  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Permutation target = apply_transposition(vertices_[v], Root{i, j});
        const std::size_t t = lex_rank(target);
        const int change = lengths[t] - lengths[v];
        bool quantum;
        if (change == 1)
          quantum = false;
        else if (change == 1 - 2 * (j - i))
          quantum = true;
        else
          continue;
        out_[v].push_back(Arc{static_cast<std::uint32_t>(t), static_cast<std::uint8_t>(i),
                              static_cast<std::uint8_t>(j), quantum});
        in_[t].push_back(static_cast<std::uint32_t>(v));
        ++edge_count_;
      }
  }
}

std::size_t QuantumBruhatGraph::index_of(const Permutation& w) const {
  if (w.size() != n_)
    throw PreconditionError("permutation " + w.to_string() + " is not in S_" + std::to_string(n_));
  return lex_rank(w);
}

QExponent QuantumBruhatGraph::arc_weight(const Arc& arc) const {
  return arc.quantum ? QExponent::interval(n_, arc.i, arc.j) : QExponent::zero(n_);
}

QbgEdge QuantumBruhatGraph::edge(std::size_t source, const Arc& arc) const {
  return QbgEdge{vertices_[source], vertices_[arc.target], Root{arc.i, arc.j}, arc_weight(arc)};
}

std::vector<QbgEdge> QuantumBruhatGraph::out_edges(const Permutation& w) const {
  const std::size_t s = index_of(w);
  std::vector<QbgEdge> out;
  for (const Arc& arc : out_[s]) out.push_back(edge(s, arc));
  return out;
}

std::vector<QbgEdge> QuantumBruhatGraph::edges() const {
  std::vector<QbgEdge> out;
  out.reserve(edge_count_);
  for (std::size_t s = 0; s < vertices_.size(); ++s)
    for (const Arc& arc : out_[s]) out.push_back(edge(s, arc));
  return out;
}

bool QuantumBruhatGraph::has_edge(const Permutation& w, const Root& t) const {
  const std::size_t s = index_of(w);
  return std::any_of(out_[s].begin(), out_[s].end(),
                     [&](const Arc& a) { return a.i == t.i && a.j == t.j; });
}

QuantumBruhatGraph build_graph(int n) { return QuantumBruhatGraph(n); }

// --- distances ---------------------------------------------------------------

std::vector<int> lengths_from(const QuantumBruhatGraph& g, std::size_t source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& arc : g.out_arcs(x))
      if (dist[arc.target] < 0) {
        dist[arc.target] = dist[x] + 1;
        queue.push_back(arc.target);
      }
  }
  return dist;
}

std::vector<int> lengths_to(const QuantumBruhatGraph& g, std::size_t target) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<std::size_t> queue{target};
  dist[target] = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::uint32_t y : g.in_sources(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

LengthTable::LengthTable(const QuantumBruhatGraph& g) : size_(g.vertex_count()) {
  if (size_ > 5040) throw ResourceError("all-pairs length table is limited to n<=7");
  table_.resize(size_ * size_);
  for (std::size_t u = 0; u < size_; ++u) {
    const auto d = lengths_from(g, u);
    for (std::size_t v = 0; v < size_; ++v) table_[u * size_ + v] = static_cast<std::uint8_t>(d[v]);
  }
}

int LengthTable::length(const Permutation& u, const Permutation& v) const {
  return (*this)(lex_rank(u), lex_rank(v));
}

namespace {

void require_same_n(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size())
    throw PreconditionError("permutations " + u.to_string() + " and " + v.to_string() +
                            " have different sizes");
}

// Least-index successor one step closer to the target.
const QuantumBruhatGraph::Arc* lex_least_step(const QuantumBruhatGraph& g, std::size_t x,
                                              const std::vector<int>& to_target) {
  const QuantumBruhatGraph::Arc* best = nullptr;
  for (const auto& arc : g.out_arcs(x))
    if (to_target[arc.target] == to_target[x] - 1 && (!best || arc.target < best->target))
      best = &arc;
  return best;
}

} // namespace

Distance oracle_distance(const QuantumBruhatGraph& g, const Permutation& u, const Permutation& v) {
  require_same_n(u, v);
  const std::size_t target = g.index_of(v);
  const auto to_target = lengths_to(g, target);
  std::size_t x = g.index_of(u);
  Distance d{to_target[x], QExponent::zero(g.n())};
  while (x != target) {
    const auto* arc = lex_least_step(g, x, to_target);
    if (!arc) throw InternalError("quantum Bruhat graph is not strongly connected");
    d.weight += g.arc_weight(*arc);
    x = arc->target;
  }
  return d;
}

std::vector<Distance> oracle_distances_to(const QuantumBruhatGraph& g, const Permutation& target) {
  const std::size_t t = g.index_of(target);
  const auto to_target = lengths_to(g, t);
  std::vector<std::size_t> order(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return to_target[a] < to_target[b]; });
  std::vector<Distance> out(g.vertex_count());
  for (std::size_t x : order) {
    out[x].length = to_target[x];
    if (x == t) {
      out[x].weight = QExponent::zero(g.n());
      continue;
    }
    const auto* arc = lex_least_step(g, x, to_target);
    if (!arc) throw InternalError("quantum Bruhat graph is not strongly connected");
    out[x].weight = g.arc_weight(*arc) + out[arc->target].weight;
  }
  return out;
}

std::vector<std::vector<QbgEdge>> all_shortest_paths(const QuantumBruhatGraph& g,
                                                     const Permutation& u, const Permutation& v) {
  require_same_n(u, v);
  const std::size_t target = g.index_of(v);
  const auto to_target = lengths_to(g, target);
  std::vector<std::vector<QbgEdge>> paths;
  std::vector<QbgEdge> current;
  auto walk = [&](auto&& self, std::size_t x) -> void {
    if (x == target) {
      paths.push_back(current);
      return;
    }
    for (const auto& arc : g.out_arcs(x))
      if (to_target[arc.target] == to_target[x] - 1) {
        current.push_back(g.edge(x, arc));
        self(self, arc.target);
        current.pop_back();
      }
  };
  walk(walk, g.index_of(u));
  return paths;
}

QExponent formula_weight(const Permutation& u, const Permutation& v) {
  require_same_n(u, v);
  const int n = u.size();
  std::vector<int> d(n - 1);
  for (int k = 1; k < n; ++k) d[k - 1] = depth(prefix_set(u, k), prefix_set(v, k), n);
  return QExponent(std::move(d));
}

std::vector<QbgEdge> bfp_greedy_path(const Permutation& u, const Permutation& v) {
  require_same_n(u, v);
  const int n = u.size();
  std::vector<QbgEdge> path;
  Permutation cur = u;
  for (int s = 1; s < n; ++s) {
    // v_s is the largest value in the order starting at v_s + 1.
    const int r = v(s) % n + 1;
    int prev = s;
    while (cur(s) != v(s)) {
      int q = prev + 1;
      while (q <= n && !shifted_less(r, cur(s), cur(q), n)) ++q;
      if (q > n) throw InternalError("greedy path ran out of positions at " + cur.to_string());
      const Root t{s, q};
      const auto w = edge_weight(cur, t);
      if (!w) throw InternalError("greedy step " + to_string(t) + " from " + cur.to_string() +
                                  " is not an edge");
      Permutation next = apply_transposition(cur, t);
      path.push_back(QbgEdge{cur, next, t, *w});
      cur = std::move(next);
      prev = q;
    }
  }
  return path;
}

QExponent path_weight(const std::vector<QbgEdge>& path, int n) {
  QExponent total = QExponent::zero(n);
  for (const auto& e : path) total += e.weight;
  return total;
}

std::vector<std::vector<QbgEdge>> increasing_paths(const QuantumBruhatGraph& g,
                                                   const Permutation& u, const Permutation& v,
                                                   const std::vector<Root>& ordering) {
  require_same_n(u, v);
  const int n = g.n();
  if (!is_reflection_ordering(ordering, n))
    throw PreconditionError("root sequence is not a reflection ordering");
  // position[i][j] of e_i - e_j in the ordering
  std::vector<std::vector<int>> position(n + 1, std::vector<int>(n + 1, -1));
  for (std::size_t p = 0; p < ordering.size(); ++p) position[ordering[p].i][ordering[p].j] = int(p);

  const std::size_t target = g.index_of(v);
  std::vector<std::vector<QbgEdge>> paths;
  std::vector<QbgEdge> current;
  auto walk = [&](auto&& self, std::size_t x, int last) -> void {
    if (x == target) paths.push_back(current);
    for (const auto& arc : g.out_arcs(x)) {
      const int p = position[arc.i][arc.j];
      if (p <= last) continue;
      current.push_back(g.edge(x, arc));
      self(self, arc.target, p);
      current.pop_back();
    }
  };
  walk(walk, g.index_of(u), -1);
  return paths;
}

} // namespace qbg
