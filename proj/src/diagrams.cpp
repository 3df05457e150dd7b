#include "qbg/diagrams.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "qbg/error.hpp"
#include "qbg/graph.hpp"
#include "qbg/tilted_order.hpp"

namespace qbg {

namespace {

void require_shapes(const Permutation& u, const Permutation& v, const ShiftSequence& a) {
  if (u.size() != v.size())
    throw PreconditionError("permutations " + u.to_string() + " and " + v.to_string() +
                            " have different sizes");
  if (a.size() != u.size() - 1)
    throw PreconditionError("shift sequence " + a.to_string() + " needs " +
                            std::to_string(u.size() - 1) + " entries");
}

std::string set_label(ValueSet s) { return "P{" + s.to_string() + "}"; }

} // namespace

bool is_flat(const Permutation& u, const Permutation& v, const ShiftSequence& a) {
  require_shapes(u, v, a);
  if (!shift_compatible(u, v, a)) return false;
  const int n = u.size();
  for (int k = 2; k < n; ++k)
    if (!shifted_gale_leq(prefix_set(u, k - 1), prefix_set(v, k - 1), a[k], n)) return false;
  return true;
}

ShiftSequence find_flat(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size())
    throw PreconditionError("permutations " + u.to_string() + " and " + v.to_string() +
                            " have different sizes");
  const int n = u.size();
  std::vector<int> a;
  for (int k = 1; k < n; ++k) {
    const ValueSet choices =
        valid_shifts(prefix_set(u, k - 1), prefix_set(v, k - 1), n) &
        valid_shifts(prefix_set(u, k), prefix_set(v, k), n);
    if (choices.empty())
      throw InternalError("no flat shift in column " + std::to_string(k) + " for (" +
                          u.to_string() + ", " + v.to_string() + ")");
    a.push_back(choices.elements().front());
  }
  return ShiftSequence(std::move(a));
}

bool TiltedDiagram::contains(const Cell& c) const {
  return std::binary_search(cells.begin(), cells.end(), c);
}

std::string TiltedDiagram::to_string() const {
  std::string out = "{";
  for (std::size_t m = 0; m < cells.size(); ++m) {
    if (m) out += ',';
    out += '(' + std::to_string(cells[m].row) + ',' + std::to_string(cells[m].column) + ')';
  }
  return out + "}";
}

TiltedDiagram tilted_rothe(const Permutation& w, const ShiftSequence& a, DiagramKind kind) {
  const int n = w.size();
  if (a.size() != n - 1)
    throw PreconditionError("shift sequence " + a.to_string() + " needs " +
                            std::to_string(n - 1) + " entries");
  const Permutation inv = w.inverse();
  TiltedDiagram d{kind, {}};
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k < n; ++k) {
      if (inv(i) <= k) continue;
      const bool in = kind == DiagramKind::down ? shifted_less(a[k], i, w(k), n)
                                                : shifted_less(a[k], w(k), i, n);
      if (in) d.cells.push_back(Cell{i, k});
    }
  return d;
}

std::string render_diagram(const Permutation& w, const ShiftSequence& a, const TiltedDiagram& d) {
  const int n = w.size();
  std::ostringstream out;
  out << "    ";
  for (int k = 1; k <= n; ++k) out << ' ' << (k % 10) << ' ';
  out << '\n';
  for (int i = 1; i <= n; ++i) {
    std::string floor;
    for (int k = 1; k <= n; ++k) floor += (k < n && a[k] == i) ? " --" : "   ";
    if (floor.find('-') != std::string::npos) out << "    " << floor << '\n';
    out << (i < 10 ? "  " : " ") << i << ' ';
    for (int k = 1; k <= n; ++k) {
      char mark = '.';
      if (w(k) == i)
        mark = 'o';
      else if (d.contains(Cell{i, k}))
        mark = '#';
      out << ' ' << mark << ' ';
    }
    out << '\n';
  }
  return out.str();
}

// --- signs -------------------------------------------------------------------

SignedSet sort_indices(const std::vector<int>& indices) {
  SignedSet out;
  for (std::size_t x = 0; x < indices.size(); ++x) {
    if (out.set.contains(indices[x])) return SignedSet{0, out.set};
    out.set = out.set.with(indices[x]);
    for (std::size_t y = x + 1; y < indices.size(); ++y)
      if (indices[x] > indices[y]) out.sign = -out.sign;
  }
  return out;
}

SignedSet append_index(ValueSet base, int i) {
  std::vector<int> list = base.elements();
  list.push_back(i);
  return sort_indices(list);
}

SignedSet remove_index(ValueSet base, int i) {
  const std::vector<int> list = base.elements();
  const auto it = std::find(list.begin(), list.end(), i);
  if (it == list.end())
    throw PreconditionError(std::to_string(i) + " is not in {" + base.to_string() + "}");
  const int k = static_cast<int>(list.size());
  const int j = static_cast<int>(it - list.begin()) + 1;
  return SignedSet{(k - j) % 2 ? -1 : 1, base.without(i)};
}

// --- equations ---------------------------------------------------------------

std::string to_string(EquationRule rule) {
  switch (rule) {
    case EquationRule::below_bottom: return "below-bottom";
    case EquationRule::above_top: return "above-top";
    case EquationRule::above_both: return "above-both";
    case EquationRule::moved_entry: return "moved-entry";
    case EquationRule::exchange: return "exchange";
  }
  return "?";
}

std::string PluckerEquation::to_string() const {
  if (terms.size() == 1 && terms.front().second.empty())
    return set_label(terms.front().first) + " = 0";
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    if (t == 0)
      out += term.coefficient < 0 ? "-" : "";
    else
      out += term.coefficient < 0 ? " - " : " + ";
    const int mag = std::abs(term.coefficient);
    if (mag != 1) out += std::to_string(mag) + "*";
    out += set_label(term.first) + "*" + set_label(term.second);
  }
  return out + " = 0";
}

std::string EquationSet::to_json() const {
  nlohmann::json doc;
  doc["u"] = u.to_string();
  doc["v"] = v.to_string();
  doc["a"] = a.entries();
  doc["x"] = x ? nlohmann::json(x->to_string()) : nlohmann::json(nullptr);
  doc["count"] = equations.size();
  doc["equations"] = nlohmann::json::array();
  for (const auto& e : equations) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : e.terms)
      terms.push_back({{"coefficient", t.coefficient},
                       {"sets", {t.first.to_string(), t.second.to_string()}}});
    doc["equations"].push_back({{"rule", qbg::to_string(e.rule)},
                                {"cell", {e.cell.row, e.cell.column}},
                                {"text", e.to_string()},
                                {"terms", terms}});
  }
  doc["unmatched"] = nlohmann::json::array();
  for (const auto& c : unmatched) doc["unmatched"].push_back({c.row, c.column});
  return doc.dump(1) + "\n";
}

namespace {

PluckerEquation vanish(EquationRule rule, Cell cell, ValueSet prefix, int i) {
  const SignedSet s = append_index(prefix, i);
  if (s.sign == 0) throw InternalError("equation for a cell repeats an index");
  return PluckerEquation{rule, cell, {PluckerTerm{s.sign, s.set, ValueSet()}}};
}

std::vector<Cell> by_column(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end(), [](const Cell& l, const Cell& r) {
    return std::tie(l.column, l.row) < std::tie(r.column, r.row);
  });
  return cells;
}

} // namespace

EquationSet equations(const Permutation& u, const Permutation& v, const ShiftSequence& a) {
  require_shapes(u, v, a);
  if (!shift_compatible(u, v, a))
    throw PreconditionError(u.to_string() + " is not <=_a " + v.to_string() + " for a=" +
                            a.to_string());
  EquationSet out{u, v, a, std::nullopt, {}, {}};
  for (const Cell& c : by_column(tilted_rothe(u, a, DiagramKind::down).cells))
    out.equations.push_back(vanish(EquationRule::below_bottom, c, prefix_set(u, c.column - 1), c.row));
  for (const Cell& c : by_column(tilted_rothe(v, a, DiagramKind::up).cells))
    out.equations.push_back(vanish(EquationRule::above_top, c, prefix_set(v, c.column - 1), c.row));
  return out;
}

EquationSet equations_with_x(const Permutation& u, const Permutation& v, const ShiftSequence& a,
                             const Permutation& x) {
  require_shapes(u, v, a);
  if (x.size() != v.size())
    throw PreconditionError("x=" + x.to_string() + " has a different size from v");
  const int n = v.size();
  if (!is_flat(u, v, a))
    throw PreconditionError("a=" + a.to_string() + " is not flat for (" + u.to_string() + ", " +
                            v.to_string() + ")");
  std::vector<int> differ;
  for (int k = 1; k <= n; ++k)
    if (x(k) != v(k)) differ.push_back(k);
  if (differ.size() != 2)
    throw PreconditionError("x=" + x.to_string() + " is not v t_pq for v=" + v.to_string());
  const int p = differ[0], q = differ[1];
  if (!interval_members_criterion(u, v, x, CriterionMode::exists_shift))
    throw PreconditionError("x=" + x.to_string() + " is not in [" + u.to_string() + ", " +
                            v.to_string() + "]");
  if (!edge_weight(x, Root{p, q}))
    throw PreconditionError("x=" + x.to_string() + " -> v=" + v.to_string() +
                            " is not an edge, so l(u,x) != l(u,v)-1");

  EquationSet out{u, v, a, x, {}, {}};
  for (const Cell& c : by_column(tilted_rothe(u, a, DiagramKind::down).cells))
    out.equations.push_back(vanish(EquationRule::below_bottom, c, prefix_set(u, c.column - 1), c.row));

  const TiltedDiagram above_x = tilted_rothe(x, a, DiagramKind::up);
  const ValueSet between = open_cyclic(x(p), x(q), n);
  for (const Cell& c : by_column(tilted_rothe(v, a, DiagramKind::up).cells)) {
    const int i = c.row, k = c.column;
    if (above_x.contains(c)) {
      out.equations.push_back(vanish(EquationRule::above_both, c, prefix_set(x, k - 1), i));
    } else if (i == x(p) && p < k && k < q) {
      out.equations.push_back(vanish(EquationRule::moved_entry, c, prefix_set(x, k - 1), x(q)));
    } else if (k == q && between.contains(i)) {
      // P_{x[q-1]+i} P_{x[p-1]+x_q} - P_{x[p-1]+i} P_{x[q-1]+x_q}
      const SignedSet a1 = append_index(prefix_set(x, q - 1), i);
      const SignedSet a2 = append_index(prefix_set(x, p - 1), x(q));
      const SignedSet b1 = append_index(prefix_set(x, p - 1), i);
      const SignedSet b2 = append_index(prefix_set(x, q - 1), x(q));
      PluckerEquation e{EquationRule::exchange, c, {}};
      if (a1.sign != 0 && a2.sign != 0) e.terms.push_back(PluckerTerm{a1.sign * a2.sign, a1.set, a2.set});
      if (b1.sign != 0 && b2.sign != 0) e.terms.push_back(PluckerTerm{-b1.sign * b2.sign, b1.set, b2.set});
      if (e.terms.empty()) throw InternalError("exchange relation is identically zero");
      out.equations.push_back(std::move(e));
    } else {
      out.unmatched.push_back(c);
    }
  }
  return out;
}

} // namespace qbg
