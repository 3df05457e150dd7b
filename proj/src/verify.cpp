#include "qbg/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "qbg/diagrams.hpp"
#include "qbg/error.hpp"
#include "qbg/graph.hpp"
#include "qbg/membership.hpp"
#include "qbg/sampler.hpp"
#include "qbg/tilted_order.hpp"

namespace qbg {

namespace {

constexpr std::size_t kMaxReported = 10;

struct Recorder {
  SuiteReport& report;
  long long failures = 0;

  void fail(const std::string& message) {
    report.passed = false;
    ++failures;
    if (report.failures.size() < kMaxReported) report.failures.push_back(message);
  }
  void check(bool ok, const std::string& message) {
    if (!ok) fail(message);
  }
};

void require_size(const SuiteOptions& o, int lo, int hi, std::string_view suite) {
  if (o.n < lo || o.n > hi)
    throw PreconditionError("suite " + std::string(suite) + " supports n in [" +
                            std::to_string(lo) + "," + std::to_string(hi) + "], got " +
                            std::to_string(o.n));
}

int choose2(int n) { return n * (n - 1) / 2; }

std::string pair_text(const Permutation& u, const Permutation& v) {
  return "(" + u.to_string() + ", " + v.to_string() + ")";
}

std::string count_text(long long count, const std::string& noun) {
  return std::to_string(count) + " " + noun;
}

// --- graph suites --------------------------------------------------------------

SuiteReport distance_suite(const SuiteOptions& o) {
  require_size(o, 1, 6, "distance");
  SuiteReport r{"distance", true, "", {}, {}};
  Recorder rec{r};
  const auto g = build_graph(o.n);
  long long pairs = 0;
  for (std::size_t t = 0; t < g.vertex_count(); ++t) {
    const Permutation& v = g.vertex(t);
    const auto oracle = oracle_distances_to(g, v);
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
      ++pairs;
      const Permutation& u = g.vertex(s);
      const QExponent formula = formula_weight(u, v);
      rec.check(formula == oracle[s].weight,
                pair_text(u, v) + ": formula " + formula.to_monomial() + " vs oracle " +
                    oracle[s].weight.to_monomial());
    }
  }
  r.summary = count_text(pairs, "pairs") + ", " + count_text(rec.failures, "mismatches");
  return r;
}

// Distinct weights of all walks from `source` with exactly t steps, per vertex.
std::vector<std::vector<std::set<std::vector<int>>>> walk_weights(const QuantumBruhatGraph& g,
                                                                  std::size_t source,
                                                                  int max_steps) {
  std::vector<std::vector<std::set<std::vector<int>>>> layers(
      max_steps + 1, std::vector<std::set<std::vector<int>>>(g.vertex_count()));
  layers[0][source].insert(QExponent::zero(g.n()).exps());
  for (int t = 0; t < max_steps; ++t)
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
      for (const auto& w : layers[t][x])
        for (const auto& arc : g.out_arcs(x)) {
          std::vector<int> next = w;
          if (arc.quantum)
            for (int k = arc.i; k < arc.j; ++k) ++next[k - 1];
          layers[t + 1][arc.target].insert(std::move(next));
        }
  return layers;
}

SuiteReport samepath_suite(const SuiteOptions& o) {
  require_size(o, 1, 4, "samepath");
  SuiteReport r{"samepath", true, "", {}, {}};
  Recorder rec{r};
  const auto g = build_graph(o.n);
  const LengthTable lengths(g);
  long long pairs = 0, shortest = 0, walks = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    int longest = 0;
    for (std::size_t t = 0; t < g.vertex_count(); ++t) longest = std::max(longest, lengths(s, t));
    const auto layers = walk_weights(g, s, longest + 2);
    const Permutation& u = g.vertex(s);
    for (std::size_t t = 0; t < g.vertex_count(); ++t) {
      ++pairs;
      const Permutation& v = g.vertex(t);
      const QExponent d = formula_weight(u, v);
      for (const auto& path : all_shortest_paths(g, u, v)) {
        ++shortest;
        const QExponent w = path_weight(path, o.n);
        rec.check(w == d, pair_text(u, v) + ": shortest path of weight " + w.to_monomial() +
                              ", expected " + d.to_monomial());
      }
      const int ell = lengths(s, t);
      for (int steps = 0; steps <= ell + 2; ++steps)
        for (const auto& exps : layers[steps][t]) {
          ++walks;
          const QExponent w(exps);
          rec.check(d.divides(w), pair_text(u, v) + ": walk weight " + w.to_monomial() +
                                      " not divisible by " + d.to_monomial());
          rec.check(w != d || steps == ell, pair_text(u, v) + ": minimal weight reached in " +
                                                std::to_string(steps) + " steps, length is " +
                                                std::to_string(ell));
        }
    }
  }
  r.summary = count_text(pairs, "pairs") + ", " + count_text(shortest, "shortest paths") + ", " +
              count_text(walks, "walk weights up to length+2") + ", " +
              count_text(rec.failures, "violations");
  return r;
}

SuiteReport bfp_suite(const SuiteOptions& o) {
  require_size(o, 1, 6, "bfp");
  SuiteReport r{"bfp", true, "", {}, {}};
  Recorder rec{r};
  const auto g = build_graph(o.n);
  long long pairs = 0;
  for (std::size_t t = 0; t < g.vertex_count(); ++t) {
    const auto to_v = lengths_to(g, t);
    const Permutation& v = g.vertex(t);
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
      ++pairs;
      const Permutation& u = g.vertex(s);
      const auto path = bfp_greedy_path(u, v);
      bool increasing = true;
      for (std::size_t e = 1; e < path.size(); ++e) increasing &= path[e - 1].root < path[e].root;
      const Permutation end = path.empty() ? u : path.back().target;
      rec.check(end == v && increasing, pair_text(u, v) + ": greedy path malformed");
      rec.check(int(path.size()) == to_v[s], pair_text(u, v) + ": greedy length " +
                                                 std::to_string(path.size()) + " vs " +
                                                 std::to_string(to_v[s]));
      rec.check(path_weight(path, o.n) == formula_weight(u, v),
                pair_text(u, v) + ": greedy weight " + path_weight(path, o.n).to_monomial());
    }
  }
  r.summary = count_text(pairs, "pairs") + ", " + count_text(rec.failures, "mismatches");
  return r;
}

SuiteReport increasing_suite(const SuiteOptions& o) {
  require_size(o, 1, 4, "increasing");
  SuiteReport r{"increasing", true, "", {}, {}};
  Recorder rec{r};
  const auto g = build_graph(o.n);
  const LengthTable lengths(g);
  const auto words = reduced_words(Permutation::longest(o.n));
  long long checks = 0;
  for (const auto& word : words) {
    const auto ordering = reflection_ordering(word, o.n);
    for (std::size_t s = 0; s < g.vertex_count(); ++s)
      for (std::size_t t = 0; t < g.vertex_count(); ++t) {
        ++checks;
        const auto paths = increasing_paths(g, g.vertex(s), g.vertex(t), ordering);
        rec.check(paths.size() == 1 && int(paths.front().size()) == lengths(s, t),
                  pair_text(g.vertex(s), g.vertex(t)) + ": " + std::to_string(paths.size()) +
                      " increasing paths");
      }
  }
  r.summary = count_text(long(words.size()), "reduced words") + ", " +
              count_text(checks, "(ordering, pair) checks") + ", " +
              count_text(rec.failures, "failures");
  return r;
}

SuiteReport rotation_suite(const SuiteOptions& o) {
  require_size(o, 1, 7, "rotation");
  SuiteReport r{"rotation", true, "", {}, {}};
  Recorder rec{r};
  const auto g = build_graph(o.n);
  const int n = o.n;
  long long checks = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    const Permutation& w = g.vertex(s);
    const Permutation rotated = long_cycle_rotate(w);
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        ++checks;
        const Root t{i, j};
        const bool edge = g.has_edge(w, t);
        rec.check(edge == g.has_edge(rotated, t),
                  "edge " + w.to_string() + " " + to_string(t) + " not rotation invariant");
        bool cyclic = true;
        for (int k = i + 1; k < j; ++k)
          cyclic &= cyclic_contains(CyclicInterval{w(j), w(i), Openness::open, n}, w(k));
        rec.check(edge == cyclic,
                  "edge " + w.to_string() + " " + to_string(t) + " disagrees with cyclic criterion");
      }
  }
  r.summary = count_text(checks, "(vertex, root) checks") +
              ", rotation invariance and cyclic criterion: " + count_text(rec.failures, "failures");
  return r;
}

// --- order and diagram suites ------------------------------------------------

SuiteReport tilted_suite(const SuiteOptions& o) {
  require_size(o, 1, 5, "tilted");
  SuiteReport r{"tilted", true, "", {}, {}};
  Recorder rec{r};
  const auto g = build_graph(o.n);
  const LengthTable lengths(g);
  long long triples = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s)
    for (std::size_t t = 0; t < g.vertex_count(); ++t)
      for (std::size_t m = 0; m < g.vertex_count(); ++m) {
        ++triples;
        const Permutation &u = g.vertex(s), &v = g.vertex(t), &w = g.vertex(m);
        const bool by_length = lengths(s, m) + lengths(m, t) == lengths(s, t);
        const bool all = interval_members_criterion(u, v, w, CriterionMode::all_shifts);
        const bool exists = interval_members_criterion(u, v, w, CriterionMode::exists_shift);
        rec.check(by_length == all && all == exists,
                  "w=" + w.to_string() + " in " + pair_text(u, v) + ": length " +
                      std::to_string(by_length) + ", all " + std::to_string(all) + ", exists " +
                      std::to_string(exists));
      }
  r.summary = count_text(triples, "triples") +
              (rec.failures ? ", " + count_text(rec.failures, "disagreements")
                            : std::string(", equivalences hold"));
  return r;
}

SuiteReport flat_count_suite(const SuiteOptions& o) {
  require_size(o, 1, 6, "flat-count");
  SuiteReport r{"flat-count", true, "", {}, {}};
  Recorder rec{r};
  const auto g = build_graph(o.n);
  const LengthTable lengths(g);
  const int total = choose2(o.n);
  long long pairs = 0, coatoms = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s)
    for (std::size_t t = 0; t < g.vertex_count(); ++t) {
      ++pairs;
      const Permutation &u = g.vertex(s), &v = g.vertex(t);
      const ShiftSequence a = find_flat(u, v);
      rec.check(is_flat(u, v, a), pair_text(u, v) + ": find_flat result " + a.to_string() +
                                      " is not flat");
      const int expected = total - lengths(s, t);
      const auto count = equations(u, v, a).equations.size();
      rec.check(int(count) == expected, pair_text(u, v) + ": " + std::to_string(count) +
                                            " equations, expected " + std::to_string(expected));
      // coatoms x = v t_pq with x in [u,v] and l(x,v) = 1
      for (std::uint32_t x : g.in_sources(t)) {
        if (lengths(s, x) + 1 != lengths(s, t)) continue;
        ++coatoms;
        const auto eqs = equations_with_x(u, v, a, g.vertex(x));
        rec.check(int(eqs.equations.size()) == expected && eqs.unmatched.empty(),
                  pair_text(u, v) + " x=" + g.vertex(x).to_string() + ": " +
                      std::to_string(eqs.equations.size()) + " equations, " +
                      std::to_string(eqs.unmatched.size()) + " unmatched cells, expected " +
                      std::to_string(expected));
      }
    }
  r.summary = count_text(pairs, "pairs") + ", " + count_text(coatoms, "coatom triples") +
              (rec.failures ? ", " + count_text(rec.failures, "count violations")
                            : std::string(", count law holds"));
  return r;
}

// --- geometry suites ---------------------------------------------------------

SuiteReport fixedpoints_suite(const SuiteOptions& o) {
  require_size(o, 1, 4, "fixedpoints");
  SuiteReport r{"fixedpoints", true, "", {}, {}};
  Recorder rec{r};
  const auto g = build_graph(o.n);
  std::vector<Flag> points;
  for (std::size_t m = 0; m < g.vertex_count(); ++m) points.push_back(fixed_point(g.vertex(m)));
  long long triples = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s)
    for (std::size_t t = 0; t < g.vertex_count(); ++t) {
      const Permutation &u = g.vertex(s), &v = g.vertex(t);
      const TiltedInterval iv = interval(u, v, g);
      const ShiftSequence a = find_flat(u, v);
      for (std::size_t m = 0; m < g.vertex_count(); ++m) {
        ++triples;
        const bool expected = iv.contains(g.vertex(m));
        const bool by_plucker = member_T_plucker(iv, points[m], false);
        const bool by_rank = member_T_rank(u, v, a, points[m], false);
        const bool by_grassmann = member_T_grassmann(u, v, a, points[m], false);
        rec.check(by_plucker == expected && by_rank == expected && by_grassmann == expected,
                  "e_" + g.vertex(m).to_string() + " for " + pair_text(u, v) + ": interval " +
                      std::to_string(expected) + ", plucker " + std::to_string(by_plucker) +
                      ", rank " + std::to_string(by_rank) + ", grassmann " +
                      std::to_string(by_grassmann));
      }
    }
  r.summary = count_text(triples, "triples") + ", " + count_text(rec.failures, "mismatches");
  return r;
}

std::vector<std::pair<Permutation, Permutation>> sample_pairs(int n, int count, std::uint64_t seed,
                                                              bool include_worked_example) {
  std::vector<std::pair<Permutation, Permutation>> all;
  const auto perms = all_permutations(n);
  for (const auto& u : perms)
    for (const auto& v : perms) all.emplace_back(u, v);
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<std::pair<Permutation, Permutation>> out;
  if (include_worked_example && n == 4) {
    const auto worked = std::make_pair(parse_permutation("4321"), parse_permutation("3142"));
    out.push_back(worked);
    all.erase(std::remove(all.begin(), all.end(), worked), all.end());
  }
  for (const auto& p : all) {
    if (int(out.size()) >= count) break;
    out.push_back(p);
  }
  return out;
}

// Subintervals [x,y] ⊆ [u,v], grouped by member set. A label is compatible when
// u <=_a x <=_a y <=_a v for one shift sequence a valid for (u,v); inside [u,v]
// that is the same as x <=_u y, and the two tests are cross-checked here.
struct SubintervalClass {
  std::vector<Permutation> members;
  std::vector<std::pair<Permutation, Permutation>> labels;
  std::vector<std::pair<Permutation, Permutation>> compatible;
};

std::vector<SubintervalClass> subinterval_classes(const TiltedInterval& uv,
                                                  const QuantumBruhatGraph& g) {
  const Permutation& u = uv.bottom;
  const Permutation& v = *uv.top;
  const auto shifts = all_shift_sequences(u, v);
  std::map<std::vector<Permutation>, SubintervalClass> classes;
  for (const auto& x : uv.members)
    for (const auto& y : uv.members) {
      const TiltedInterval xy = interval(x, y, g);
      const bool inside = std::all_of(xy.members.begin(), xy.members.end(),
                                      [&](const Permutation& w) { return uv.contains(w); });
      if (!inside) continue;
      auto& c = classes[xy.members];
      c.members = xy.members;
      c.labels.emplace_back(x, y);
      const bool compatible = std::any_of(shifts.begin(), shifts.end(), [&](const ShiftSequence& a) {
        return shift_compatible(u, x, a) && shift_compatible(x, y, a) && shift_compatible(y, v, a);
      });
      if (compatible != tilted_leq(u, x, y, g))
        throw InternalError("shift compatibility and x <=_u y disagree for (" + x.to_string() +
                            ", " + y.to_string() + ")");
      if (compatible) c.compatible.emplace_back(x, y);
    }
  std::vector<SubintervalClass> out;
  for (auto& [key, c] : classes) out.push_back(std::move(c));
  return out;
}

SuiteReport equivalence_suite(const SuiteOptions& o) {
  require_size(o, 2, 5, "equivalence");
  SuiteReport r{"equivalence", true, "", {}, {}};
  Recorder rec{r};
  const auto g = build_graph(o.n);
  const int pair_count = o.samples > 0 ? o.samples : 50;
  const auto pairs = sample_pairs(o.n, pair_count, o.seed, true);
  std::mt19937_64 rng(o.seed ^ 0x5eedULL);
  long long flags = 0, checks = 0;
  for (const auto& [u, v] : pairs) {
    const TiltedInterval iv = interval(u, v, g);
    const auto shifts = all_shift_sequences(u, v);
    const ShiftSequence flat = find_flat(u, v);
    const EquationSet chart_eqs = equations(u, v, flat);

    struct Candidate {
      Flag flag;
      std::string origin;
      bool must_be_open;
    };
    std::vector<Candidate> candidates;
    for (int s = 0; s < 5; ++s)
      candidates.push_back({sample_in_open_stratum(u, v, rng()), "open-stratum sample", true});
    for (int s = 0; s < 5; ++s) candidates.push_back({random_flag(o.n, rng()), "generic", false});
    for (const auto& w : all_permutations(o.n))
      candidates.push_back({fixed_point(w), "e_" + w.to_string(), false});
    const auto classes = subinterval_classes(iv, g);
    for (int s = 0; s < 3; ++s) {
      const auto& c = classes[rng() % classes.size()];
      const auto& [x, y] = c.labels.front();
      candidates.push_back(
          {sample_in_open_stratum(x, y, rng()), "stratum sample " + pair_text(x, y), false});
    }

    for (const auto& cand : candidates) {
      ++flags;
      const Flag& f = cand.flag;
      const std::string where = pair_text(u, v) + " " + cand.origin;
      const bool closed = member_T_plucker(iv, f, false);
      const bool open = member_T_plucker(iv, f, true);
      const bool chart = f.plucker(u) != 0 && f.plucker(v) != 0;
      rec.check(!cand.must_be_open || open, where + ": sampled flag not in the open stratum");
      rec.check(open == (closed && chart), where + ": chart law fails");
      if (chart)
        rec.check(all_vanish(chart_eqs, f) == open, where + ": chart equations disagree");
      for (const auto& a : shifts) {
        ++checks;
        const bool rank_closed = member_T_rank(u, v, a, f, false);
        const bool rank_open = member_T_rank(u, v, a, f, true);
        const bool grass_closed = member_T_grassmann(u, v, a, f, false);
        const bool grass_open = member_T_grassmann(u, v, a, f, true);
        rec.check(rank_closed == closed && grass_closed == closed && rank_open == open &&
                      grass_open == open,
                  where + " a=" + a.to_string() + ": rank " + std::to_string(rank_closed) +
                      std::to_string(rank_open) + ", grassmann " + std::to_string(grass_closed) +
                      std::to_string(grass_open) + ", plucker " + std::to_string(closed) +
                      std::to_string(open));
      }
    }
  }
  r.summary = count_text(long(pairs.size()), "pairs") + ", " + count_text(flags, "flags") + ", " +
              count_text(checks, "(flag, a) checks") + ", " +
              count_text(rec.failures, "disagreements");
  return r;
}

// Disjointness is checked over compatible subintervals. A flag may also satisfy
// the open conditions of an incompatible label; those overlaps are only noted.
SuiteReport stratify_suite(const SuiteOptions& o) {
  require_size(o, 2, 4, "stratify");
  SuiteReport r{"stratify", true, "", {}, {}};
  Recorder rec{r};
  const auto g = build_graph(o.n);
  const bool exhaustive = o.n <= 3;
  const int pair_count = exhaustive ? int(g.vertex_count() * g.vertex_count())
                                    : (o.samples > 0 ? o.samples : 12);
  const auto pairs = sample_pairs(o.n, pair_count, o.seed, true);
  std::mt19937_64 rng(o.seed ^ 0x57a7ULL);
  long long flags = 0, round_trips = 0, relabelled = 0, extra_overlaps = 0;
  for (const auto& [u, v] : pairs) {
    const TiltedInterval iv = interval(u, v, g);
    const auto classes = subinterval_classes(iv, g);
    const EquationSet chart_eqs = equations(u, v, find_flat(u, v));

    for (int s = 0; s < 2; ++s) {
      ++round_trips;
      const Flag f = sample_in_open_stratum(u, v, rng());
      const StratumLabel label = stratum(u, v, f);
      rec.check(label.x == u && label.y == v, pair_text(u, v) + ": stratum of a sample is " +
                                                  pair_text(label.x, label.y));
      rec.check(all_vanish(chart_eqs, f), pair_text(u, v) + ": chart equations do not vanish");
      rec.check(member_T_plucker(iv, f, true) == (member_T_plucker(iv, f, false) &&
                                                  f.plucker(u) != 0 && f.plucker(v) != 0),
                pair_text(u, v) + ": chart law fails");
    }

    std::vector<std::size_t> chosen(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) chosen[c] = c;
    if (!exhaustive) {
      std::shuffle(chosen.begin(), chosen.end(), rng);
      chosen.resize(std::min<std::size_t>(chosen.size(), 6));
    }
    for (std::size_t c : chosen) {
      const auto& [x, y] = classes[c].labels.front();
      const Flag f = sample_in_open_stratum(x, y, rng());
      ++flags;
      const std::string where = pair_text(u, v) + " flag from " + pair_text(x, y);
      rec.check(member_T_plucker(iv, f, false), where + ": not in the closed variety");

      std::vector<std::size_t> passing;
      for (std::size_t d = 0; d < classes.size(); ++d) {
        const bool in_compatible =
            std::any_of(classes[d].compatible.begin(), classes[d].compatible.end(),
                        [&](const auto& l) { return member_T_plucker(l.first, l.second, f, true); });
        if (in_compatible) {
          passing.push_back(d);
        } else if (d != c && std::any_of(classes[d].labels.begin(), classes[d].labels.end(),
                                         [&](const auto& l) {
                                           return member_T_plucker(l.first, l.second, f, true);
                                         })) {
          ++extra_overlaps;
        }
      }
      rec.check(passing.size() == 1, where + ": open membership holds for " +
                                         std::to_string(passing.size()) +
                                         " compatible subintervals");
      if (passing.size() != 1) continue;
      const auto& home = classes[passing.front()];
      rec.check(!home.compatible.empty() && (passing.front() == c || classes[c].compatible.empty()),
                where + ": landed in a different compatible subinterval");
      const StratumLabel label = stratum(u, v, f);
      rec.check(interval(label.x, label.y, g).members == home.members,
                where + ": stratum returned " + pair_text(label.x, label.y));
      if (std::make_pair(label.x, label.y) != std::make_pair(x, y)) ++relabelled;
    }
  }
  if (relabelled)
    r.notes.push_back(std::to_string(relabelled) +
                      " flags were labelled by a pair other than the one they were sampled from");
  if (extra_overlaps)
    r.notes.push_back(std::to_string(extra_overlaps) +
                      " open memberships held for labels (x,y) with x not <=_u y");
  r.summary = count_text(long(pairs.size()), "pairs") + ", " +
              count_text(round_trips, "round trips") + ", " +
              count_text(flags, "stratum samples") + ", " + count_text(rec.failures, "failures");
  return r;
}

SuiteReport plucker_suite(const SuiteOptions& o) {
  require_size(o, 2, 6, "plucker");
  SuiteReport r{"plucker", true, "", {}, {}};
  Recorder rec{r};
  const int n = o.n;
  const int per_flag = o.samples > 0 ? o.samples : 100;
  std::mt19937_64 rng(o.seed ^ 0x91ACULL);
  std::vector<Flag> flags;
  for (int s = 0; s < 4; ++s) flags.push_back(random_flag(n, rng()));
  for (const auto& [u, v] : sample_pairs(n, 4, rng(), false))
    flags.push_back(sample_in_open_stratum(u, v, rng()));

  auto random_subset = [&](int size, ValueSet within) {
    auto e = within.elements();
    std::shuffle(e.begin(), e.end(), rng);
    ValueSet out;
    for (int i = 0; i < size; ++i) out = out.with(e[i]);
    return out;
  };
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  long long relations = 0;
  for (std::size_t fi = 0; fi < flags.size(); ++fi) {
    const Flag& f = flags[fi];
    const ValueSet all = ValueSet::full(n);
    for (int t = 0; t < per_flag; ++t) {
      // general relation: 1 <= s <= r < n, A ⊆ J
      const int rsize = pick(1, n - 1), ssize = pick(1, rsize);
      const ValueSet i_set = random_subset(rsize, all), j_set = random_subset(ssize, all);
      const ValueSet a_set = random_subset(pick(0, ssize), j_set);
      ++relations;
      rec.check(incidence_defect(f, i_set, j_set, a_set) == 0,
                "flag " + std::to_string(fi) + ": general relation fails for I={" +
                    i_set.to_string() + "} J={" + j_set.to_string() + "} A={" +
                    a_set.to_string() + "}");
      if (n >= 3) {
        const int k = pick(2, n - 1);
        const ValueSet ik = random_subset(k, all), jk = random_subset(k - 1, all);
        ++relations;
        rec.check(exchange_sum(f, ik, jk) == f.plucker(ik) * f.plucker(jk),
                  "flag " + std::to_string(fi) + ": one-step expansion fails for I={" +
                      ik.to_string() + "} J={" + jk.to_string() + "}");
      }
      if (n >= 4) {
        const int rr = pick(3, n - 1), ss = pick(1, rr - 2);
        const ValueSet i2 = random_subset(rr, all), j2 = random_subset(ss, all);
        ++relations;
        rec.check(exchange_sum(f, i2, j2) == 0, "flag " + std::to_string(fi) +
                                                    ": vanishing sum fails for I={" +
                                                    i2.to_string() + "} J={" + j2.to_string() + "}");
        // the same sum written for I+j: P_I P_{J+j} = sum P_{I-i+j} P_{J+i}, j not in I
        const int er = pick(1, n - 1), es = pick(0, er - 1);
        const ValueSet ie = random_subset(er, all), je = random_subset(es, all);
        const auto outside = all.minus(ie).elements();
        const int j = outside[pick(0, int(outside.size()) - 1)];
        ++relations;
        rec.check(exchange_defect(f, ie, je, j) == 0,
                  "flag " + std::to_string(fi) + ": exchange identity fails for I={" +
                      ie.to_string() + "} J={" + je.to_string() + "} j=" + std::to_string(j));
      }
    }
  }
  r.summary = count_text(long(flags.size()), "flags") + ", " +
              count_text(relations, "relations") + ", " + count_text(rec.failures, "defects");
  return r;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "distance", "samepath",    "bfp",         "increasing",  "rotation", "tilted",
      "flat-count", "fixedpoints", "equivalence", "stratify", "plucker"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "distance") return distance_suite(options);
  if (name == "samepath") return samepath_suite(options);
  if (name == "bfp") return bfp_suite(options);
  if (name == "increasing") return increasing_suite(options);
  if (name == "rotation") return rotation_suite(options);
  if (name == "tilted") return tilted_suite(options);
  if (name == "flat-count") return flat_count_suite(options);
  if (name == "fixedpoints") return fixedpoints_suite(options);
  if (name == "equivalence") return equivalence_suite(options);
  if (name == "stratify") return stratify_suite(options);
  if (name == "plucker") return plucker_suite(options);
  throw PreconditionError("unknown suite '" + std::string(name) + "'");
}

} // namespace qbg
