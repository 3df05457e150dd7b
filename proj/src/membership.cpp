#include "qbg/membership.hpp"

#include "qbg/error.hpp"

namespace qbg {

namespace {

void require_compatible(const Permutation& u, const Permutation& v, const ShiftSequence& a,
                        const Flag& f) {
  if (u.size() != v.size() || u.size() != f.n())
    throw PreconditionError("u, v and the flag must have the same size");
  if (a.size() != u.size() - 1)
    throw PreconditionError("shift sequence " + a.to_string() + " needs " +
                            std::to_string(u.size() - 1) + " entries");
  if (!shift_compatible(u, v, a))
    throw PreconditionError(u.to_string() + " is not <=_a " + v.to_string() + " for a=" +
                            a.to_string());
}

bool compare(int have, int bound, bool open) { return open ? have == bound : have <= bound; }

} // namespace

bool member_T_rank(const Permutation& u, const Permutation& v, const ShiftSequence& a,
                   const Flag& f, bool open) {
  require_compatible(u, v, a, f);
  const int n = u.size();
  for (int i = 1; i < n; ++i) {
    const ValueSet ui = prefix_set(u, i), vi = prefix_set(v, i);
    for (int j = 1; j <= n; ++j) {
      const ValueSet from_cut = closed_cyclic(a[i], j, n);
      if (!compare(f.rank_region(from_cut, i), (ui & from_cut).size(), open)) return false;
      const ValueSet to_cut = closed_cyclic(j, a[i] - 1, n);
      if (!compare(f.rank_region(to_cut, i), (vi & to_cut).size(), open)) return false;
    }
  }
  return true;
}

bool member_T_grassmann(const Permutation& u, const Permutation& v, const ShiftSequence& a,
                        const Flag& f, bool open) {
  require_compatible(u, v, a, f);
  const int n = u.size();
  for (int k = 1; k < n; ++k) {
    const ValueSet uk = prefix_set(u, k), vk = prefix_set(v, k);
    for (ValueSet s : k_subsets(n, k)) {
      const bool inside = shifted_gale_leq(uk, s, a[k], n) && shifted_gale_leq(s, vk, a[k], n);
      if (!inside && f.plucker(s) != 0) return false;
    }
    if (open && (f.plucker(uk) == 0 || f.plucker(vk) == 0)) return false;
  }
  return true;
}

bool member_T_plucker(const Permutation& u, const Permutation& v, const Flag& f, bool open) {
  if (u.size() != v.size() || u.size() != f.n())
    throw PreconditionError("u, v and the flag must have the same size");
  for (const Permutation& w : all_permutations(u.size()))
    if (!interval_members_criterion(u, v, w, CriterionMode::exists_shift) && f.plucker(w) != 0)
      return false;
  return !open || (f.plucker(u) != 0 && f.plucker(v) != 0);
}

bool member_T_plucker(const TiltedInterval& uv, const Flag& f, bool open) {
  if (!uv.top) throw PreconditionError("interval has no top element");
  if (uv.bottom.size() != f.n()) throw PreconditionError("interval and flag sizes differ");
  for (const Permutation& w : all_permutations(f.n()))
    if (!uv.contains(w) && f.plucker(w) != 0) return false;
  return !open || (f.plucker(uv.bottom) != 0 && f.plucker(*uv.top) != 0);
}

StratumLabel stratum(const Permutation& u, const Permutation& v, const Flag& f) {
  if (!member_T_plucker(u, v, f, false))
    throw PreconditionError("flag is not in the tilted Richardson variety of (" + u.to_string() +
                            ", " + v.to_string() + ")");
  const int n = u.size();
  const ShiftSequence a = find_flat(u, v);
  std::vector<int> x(n), y(n);
  ValueSet prev_i, prev_j;
  for (int k = 1; k <= n; ++k) {
    ValueSet jump_i = ValueSet::full(n), jump_j = ValueSet::full(n);
    if (k < n) {
      jump_i = jump_j = ValueSet();
      const int cut = a[k];
      for (int j = 1; j <= n; ++j) {
        const ValueSet before = CyclicInterval{cut, j, Openness::half_open_right, n}.members();
        if (f.rank_region(before, k) < f.rank_region(before.with(j), k)) jump_i = jump_i.with(j);
        const ValueSet after = CyclicInterval{j, cut - 1, Openness::half_open_left, n}.members();
        if (f.rank_region(after, k) < f.rank_region(after.with(j), k)) jump_j = jump_j.with(j);
      }
    }
    if (!prev_i.subset_of(jump_i) || jump_i.size() != k || !prev_j.subset_of(jump_j) ||
        jump_j.size() != k)
      throw InternalError("rank-jump sets do not nest at column " + std::to_string(k));
    x[k - 1] = jump_i.minus(prev_i).elements().front();
    y[k - 1] = jump_j.minus(prev_j).elements().front();
    prev_i = jump_i;
    prev_j = jump_j;
  }
  return StratumLabel{Permutation(std::move(x)), Permutation(std::move(y)), u, v, a};
}

Permutation complete_to_permutation(const Flag& f, ValueSet rows) {
  const int n = f.n();
  if (f.plucker(rows) == 0)
    throw PreconditionError("P_{" + rows.to_string() + "} vanishes on the flag");
  const int k = rows.size();
  std::vector<int> w(n);
  ValueSet cur = rows;
  for (int m = k; m >= 1; --m) {
    bool found = false;
    for (int i : cur.elements())
      if (f.plucker(cur.without(i)) != 0) {
        w[m - 1] = i;
        cur = cur.without(i);
        found = true;
        break;
      }
    if (!found) throw InternalError("no nonzero minor below {" + cur.to_string() + "}");
  }
  cur = rows;
  for (int m = k + 1; m <= n; ++m) {
    bool found = false;
    for (int i : ValueSet::full(n).minus(cur).elements())
      if (f.plucker(cur.with(i)) != 0) {
        w[m - 1] = i;
        cur = cur.with(i);
        found = true;
        break;
      }
    if (!found) throw InternalError("no nonzero minor above {" + cur.to_string() + "}");
  }
  Permutation out(std::move(w));
  if (f.plucker(out) == 0) throw InternalError("completed permutation has P_w = 0");
  return out;
}

mpq_class evaluate(const PluckerEquation& e, const Flag& f) {
  mpq_class total = 0;
  for (const auto& t : e.terms) total += t.coefficient * f.plucker(t.first) * f.plucker(t.second);
  return total;
}

bool all_vanish(const EquationSet& s, const Flag& f) {
  for (const auto& e : s.equations)
    if (evaluate(e, f) != 0) return false;
  return true;
}

} // namespace qbg
