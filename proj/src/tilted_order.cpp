#include "qbg/tilted_order.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qbg/error.hpp"
#include "qbg/lattice_path.hpp"

namespace qbg {

namespace {

void require_same_n(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size())
    throw PreconditionError("permutations " + u.to_string() + " and " + v.to_string() +
                            " have different sizes");
}

std::size_t member_index(const TiltedInterval& iv, const Permutation& w) {
  auto it = std::lower_bound(iv.members.begin(), iv.members.end(), w);
  if (it == iv.members.end() || *it != w) return iv.members.size();
  return static_cast<std::size_t>(it - iv.members.begin());
}

} // namespace

bool TiltedInterval::contains(const Permutation& w) const {
  return member_index(*this, w) < members.size();
}

int TiltedInterval::rank_of(const Permutation& w) const {
  const std::size_t m = member_index(*this, w);
  return m < members.size() ? ranks[m] : -1;
}

int TiltedInterval::height() const {
  return ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
}

bool tilted_leq(const Permutation& base, const Permutation& w, const Permutation& v,
                const QuantumBruhatGraph& g) {
  require_same_n(base, w);
  require_same_n(w, v);
  const auto from_base = lengths_from(g, g.index_of(base));
  const auto from_w = lengths_from(g, g.index_of(w));
  const std::size_t vi = g.index_of(v);
  return from_base[g.index_of(w)] + from_w[vi] == from_base[vi];
}

bool tilted_leq(const Permutation& base, const Permutation& w, const Permutation& v,
                const LengthTable& lengths) {
  return lengths.length(base, w) + lengths.length(w, v) == lengths.length(base, v);
}

bool interval_members_criterion(const Permutation& u, const Permutation& v, const Permutation& w,
                                CriterionMode mode) {
  require_same_n(u, v);
  require_same_n(u, w);
  const int n = u.size();
  for (int k = 1; k < n; ++k) {
    const ValueSet uk = prefix_set(u, k), vk = prefix_set(v, k), wk = prefix_set(w, k);
    if (mode == CriterionMode::exists_shift) {
      if ((valid_shifts(uk, wk, n) & valid_shifts(wk, vk, n)).empty()) return false;
    } else {
      for (int r : valid_shifts(uk, vk, n).elements())
        if (!shifted_gale_leq(uk, wk, r, n) || !shifted_gale_leq(wk, vk, r, n)) return false;
    }
  }
  return true;
}

TiltedInterval interval(const Permutation& u, const Permutation& v, const QuantumBruhatGraph& g) {
  require_same_n(u, v);
  const auto from_u = lengths_from(g, g.index_of(u));
  const auto to_v = lengths_to(g, g.index_of(v));
  const int total = from_u[g.index_of(v)];
  TiltedInterval iv{u, v, {}, {}};
  for (std::size_t w = 0; w < g.vertex_count(); ++w)
    if (from_u[w] + to_v[w] == total) {
      iv.members.push_back(g.vertex(w));
      iv.ranks.push_back(from_u[w]);
    }
  return iv;
}

TiltedInterval tilted_order(const Permutation& u, const QuantumBruhatGraph& g) {
  const auto from_u = lengths_from(g, g.index_of(u));
  TiltedInterval iv{u, std::nullopt, {}, {}};
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    iv.members.push_back(g.vertex(w));
    iv.ranks.push_back(from_u[w]);
  }
  return iv;
}

std::vector<HasseEdge> hasse_edges(const TiltedInterval& iv) {
  std::vector<HasseEdge> out;
  for (std::size_t m = 0; m < iv.members.size(); ++m) {
    const Permutation& w = iv.members[m];
    const int n = w.size();
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Root t{i, j};
        const Permutation target = apply_transposition(w, t);
        const std::size_t up = member_index(iv, target);
        if (up == iv.members.size() || iv.ranks[up] != iv.ranks[m] + 1) continue;
        if (auto weight = edge_weight(w, t)) out.push_back(HasseEdge{m, up, t, *weight});
      }
  }
  return out;
}

namespace {

std::string hasse_dot(const TiltedInterval& iv, const std::vector<HasseEdge>& edges) {
  std::ostringstream out;
  out << "digraph tilted {\n  rankdir=BT;\n";
  std::map<int, std::vector<std::size_t>> by_rank;
  for (std::size_t m = 0; m < iv.members.size(); ++m) by_rank[iv.ranks[m]].push_back(m);
  for (const auto& [rank, ms] : by_rank) {
    out << "  { rank=same;";
    for (std::size_t m : ms) out << " \"" << iv.members[m].to_string() << "\";";
    out << " }  // rank " << rank << "\n";
  }
  for (const auto& e : edges) {
    out << "  \"" << iv.members[e.lower].to_string() << "\" -> \""
        << iv.members[e.upper].to_string() << "\" [root=\"" << to_string(e.root) << "\"";
    if (!e.weight.is_zero()) out << ", label=\"" << e.weight.to_monomial() << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string hasse_json(const TiltedInterval& iv, const std::vector<HasseEdge>& edges) {
  nlohmann::json doc;
  doc["bottom"] = iv.bottom.to_string();
  doc["top"] = iv.top ? nlohmann::json(iv.top->to_string()) : nlohmann::json(nullptr);
  doc["nodes"] = nlohmann::json::array();
  for (std::size_t m = 0; m < iv.members.size(); ++m)
    doc["nodes"].push_back({{"perm", iv.members[m].to_string()}, {"rank", iv.ranks[m]}});
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : edges)
    doc["edges"].push_back({{"source", iv.members[e.lower].to_string()},
                            {"target", iv.members[e.upper].to_string()},
                            {"root", to_string(e.root)},
                            {"exps", e.weight.exps()}});
  return doc.dump(1) + "\n";
}

} // namespace

std::string hasse_export(const TiltedInterval& iv, GraphFormat format) {
  const auto edges = hasse_edges(iv);
  return format == GraphFormat::dot ? hasse_dot(iv, edges) : hasse_json(iv, edges);
}

} // namespace qbg
