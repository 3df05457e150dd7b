#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbg/permutation.hpp"

namespace qbg {

/// Exponent vector (d_1, ..., d_{n-1}) of the monomial q_1^{d_1} ... q_{n-1}^{d_{n-1}}.
/// Monomial multiplication is componentwise addition; divisibility is componentwise <=.
class QExponent {
public:
  QExponent() = default;
  /// All-zero exponent for S_n (length n-1).
  static QExponent zero(int n) { return QExponent(std::vector<int>(n > 0 ? n - 1 : 0, 0)); }
  /// q_i q_{i+1} ... q_{j-1}, the weight of a down edge labelled e_i - e_j.
  static QExponent interval(int n, int i, int j);
  explicit QExponent(std::vector<int> exps);

  int size() const { return static_cast<int>(exps_.size()); }
  /// d_k, 1-based.
  int operator[](int k) const { return exps_[k - 1]; }
  const std::vector<int>& exps() const { return exps_; }
  bool is_zero() const;

  QExponent& operator+=(const QExponent& rhs);
  friend QExponent operator+(QExponent lhs, const QExponent& rhs) { return lhs += rhs; }
  /// q^this divides q^other.
  bool divides(const QExponent& other) const;

  /// "1", or factors "q{i}" / "q{i}^{e}" joined by '*'.
  std::string to_monomial() const;

  friend bool operator==(const QExponent&, const QExponent&) = default;
  friend auto operator<=>(const QExponent&, const QExponent&) = default;

private:
  std::vector<int> exps_;
};

struct QbgEdge {
  Permutation source;
  Permutation target;
  Root root;
  QExponent weight;
};

/// Weight of w -> w t_ij: zero exponent if l(w t) = l(w) + 1, the indicator of
/// positions i..j-1 if l(w t) = l(w) + 1 - 2(j-i), no edge otherwise.
std::optional<QExponent> edge_weight(const Permutation& w, const Root& t);

/// Largest n for which the whole graph is materialized.
inline constexpr int kMaxGraphSize = 8;

/// The quantum Bruhat graph on S_n. Vertices are indexed by lexicographic rank,
/// so comparing indices compares one-line notation.
class QuantumBruhatGraph {
public:
  struct Arc {
    std::uint32_t target;
    std::uint8_t i;
    std::uint8_t j;
    bool quantum;  ///< down edge, weight q_i ... q_{j-1}
  };

  /// Throws ResourceError when n > kMaxGraphSize, PreconditionError when n < 1.
  explicit QuantumBruhatGraph(int n);

  int n() const { return n_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const Permutation& vertex(std::size_t index) const { return vertices_[index]; }
  std::size_t index_of(const Permutation& w) const;

  const std::vector<Arc>& out_arcs(std::size_t index) const { return out_[index]; }
  const std::vector<std::uint32_t>& in_sources(std::size_t index) const { return in_[index]; }

  QExponent arc_weight(const Arc& arc) const;
  QbgEdge edge(std::size_t source, const Arc& arc) const;
  std::vector<QbgEdge> out_edges(const Permutation& w) const;
  std::vector<QbgEdge> edges() const;
  bool has_edge(const Permutation& w, const Root& t) const;

private:
  int n_;
  std::vector<Permutation> vertices_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::size_t edge_count_ = 0;
};

QuantumBruhatGraph build_graph(int n);

/// Unweighted BFS lengths from `source` to every vertex (by index).
std::vector<int> lengths_from(const QuantumBruhatGraph& g, std::size_t source);
/// Unweighted BFS lengths from every vertex to `target` (by index).
std::vector<int> lengths_to(const QuantumBruhatGraph& g, std::size_t target);

/// l(u,v) for all pairs, by one BFS per source.
class LengthTable {
public:
  explicit LengthTable(const QuantumBruhatGraph& g);
  int operator()(std::size_t u, std::size_t v) const { return table_[u * size_ + v]; }
  int length(const Permutation& u, const Permutation& v) const;

private:
  std::size_t size_;
  std::vector<std::uint8_t> table_;
};

struct Distance {
  int length = 0;
  QExponent weight;
  friend bool operator==(const Distance&, const Distance&) = default;
};

/// Shortest length by BFS; weight summed along the lexicographically least
/// shortest path (successors compared by one-line notation).
Distance oracle_distance(const QuantumBruhatGraph& g, const Permutation& u, const Permutation& v);

/// oracle_distance(g, w, target) for every vertex w (by index), in one pass.
std::vector<Distance> oracle_distances_to(const QuantumBruhatGraph& g, const Permutation& target);

/// Every shortest u -> v path, from the BFS predecessor DAG.
std::vector<std::vector<QbgEdge>> all_shortest_paths(const QuantumBruhatGraph& g,
                                                     const Permutation& u, const Permutation& v);

/// (depth(u[1],v[1]), ..., depth(u[n-1],v[n-1])); no graph is built.
QExponent formula_weight(const Permutation& u, const Permutation& v);

/// The path from u to v whose labels increase in e_1-e_2, e_1-e_3, ..., e_{n-1}-e_n,
/// built position by position: to fix position s, repeatedly swap it with the
/// first later position whose value is larger in the shifted order where v_s is
/// the maximum.
std::vector<QbgEdge> bfp_greedy_path(const Permutation& u, const Permutation& v);

QExponent path_weight(const std::vector<QbgEdge>& path, int n);

/// All directed u -> v paths whose labels strictly increase in `ordering`.
/// Throws PreconditionError if `ordering` is not a reflection ordering.
std::vector<std::vector<QbgEdge>> increasing_paths(const QuantumBruhatGraph& g,
                                                   const Permutation& u, const Permutation& v,
                                                   const std::vector<Root>& ordering);

// --- export ------------------------------------------------------------------

enum class GraphFormat { dot, json };

/// "dot" or "json"; throws PreconditionError otherwise.
GraphFormat parse_graph_format(std::string_view name);

std::string export_graph(const QuantumBruhatGraph& g, GraphFormat format);

/// Plain-data view of an exported graph, as read back from JSON.
struct GraphData {
  int n = 0;
  std::vector<Permutation> vertices;
  struct Edge {
    Permutation source;
    Permutation target;
    QExponent weight;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::vector<Edge> edges;
};

GraphData graph_data(const QuantumBruhatGraph& g);
/// Throws ParseError on malformed input.
GraphData read_graph_json(std::string_view text);

} // namespace qbg
