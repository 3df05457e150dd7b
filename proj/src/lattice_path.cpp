#include "qbg/lattice_path.hpp"

#include <algorithm>
#include <charconv>

#include "qbg/error.hpp"

namespace qbg {

namespace {

void require_same_size(ValueSet a, ValueSet b) {
  if (a.size() != b.size())
    throw PreconditionError("sets {" + a.to_string() + "} and {" + b.to_string() +
                            "} have different sizes");
}

std::vector<int> sorted_shifted(ValueSet s, int r, int n) {
  std::vector<int> e = s.elements();
  std::sort(e.begin(), e.end(),
            [&](int x, int y) { return shifted_rank(r, x, n) < shifted_rank(r, y, n); });
  return e;
}

} // namespace

LatticePath build_path(ValueSet a, ValueSet b, int n) {
  require_same_size(a, b);
  LatticePath path;
  path.heights.push_back(0);
  int h = 0;
  int lowest = 0;
  for (int i = 1; i <= n; ++i) {
    const bool in_a = a.contains(i), in_b = b.contains(i);
    Step s = Step::flat;
    if (in_a && !in_b) {
      s = Step::up;
      ++h;
    } else if (in_b && !in_a) {
      s = Step::down;
      --h;
    }
    path.steps.push_back(s);
    path.heights.push_back(h);
    lowest = std::min(lowest, h);
  }
  path.depth = -lowest;
  return path;
}

int depth(ValueSet a, ValueSet b, int n) { return build_path(a, b, n).depth; }

ValueSet valid_shifts(ValueSet a, ValueSet b, int n) {
  const LatticePath path = build_path(a, b, n);
  ValueSet out;
  for (int x = 0; x < n; ++x)
    if (path.heights[x] == -path.depth) out = out.with(x + 1);
  return out;
}

bool shifted_gale_leq(ValueSet a, ValueSet b, int r, int n) {
  require_same_size(a, b);
  const auto sa = sorted_shifted(a, r, n);
  const auto sb = sorted_shifted(b, r, n);
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (shifted_rank(r, sa[i], n) > shifted_rank(r, sb[i], n)) return false;
  return true;
}

std::vector<ValueSet> shifted_interval(ValueSet a, ValueSet b, int r, int n) {
  if (!shifted_gale_leq(a, b, r, n))
    throw PreconditionError("{" + a.to_string() + "} is not <=_" + std::to_string(r) + " {" +
                            b.to_string() + "}");
  std::vector<ValueSet> out;
  for (ValueSet k : k_subsets(n, a.size()))
    if (shifted_gale_leq(a, k, r, n) && shifted_gale_leq(k, b, r, n)) out.push_back(k);
  return out;
}

std::string ShiftSequence::to_string() const {
  std::string out;
  for (int e : entries_) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

ShiftSequence parse_shift_sequence(std::string_view text, int n) {
  std::vector<int> entries;
  if (n == 1 && text.empty()) return ShiftSequence();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 1 || v > n)
      throw ParseError("invalid shift entry '" + std::string(tok) + "' (expected 1.." +
                       std::to_string(n) + ")");
    entries.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(entries.size()) != n - 1)
    throw ParseError("shift sequence needs " + std::to_string(n - 1) + " entries, got " +
                     std::to_string(entries.size()));
  return ShiftSequence(std::move(entries));
}

bool shift_compatible(const Permutation& u, const Permutation& v, const ShiftSequence& a) {
  const int n = u.size();
  if (a.size() != n - 1) return false;
  for (int k = 1; k < n; ++k)
    if (!shifted_gale_leq(prefix_set(u, k), prefix_set(v, k), a[k], n)) return false;
  return true;
}

ShiftSequence find_shift_sequence(const Permutation& u, const Permutation& v) {
  const int n = u.size();
  std::vector<int> a;
  for (int k = 1; k < n; ++k) {
    const ValueSet shifts = valid_shifts(prefix_set(u, k), prefix_set(v, k), n);
    if (shifts.empty()) throw InternalError("no valid shift in column " + std::to_string(k));
    a.push_back(shifts.elements().front());
  }
  return ShiftSequence(std::move(a));
}

std::vector<ShiftSequence> all_shift_sequences(const Permutation& u, const Permutation& v) {
  const int n = u.size();
  std::vector<std::vector<int>> out{{}};
  for (int k = 1; k < n; ++k) {
    const auto shifts = valid_shifts(prefix_set(u, k), prefix_set(v, k), n).elements();
    std::vector<std::vector<int>> next;
    for (const auto& partial : out)
      for (int r : shifts) {
        next.push_back(partial);
        next.back().push_back(r);
      }
    out = std::move(next);
  }
  std::vector<ShiftSequence> seqs;
  for (auto& e : out) seqs.emplace_back(std::move(e));
  return seqs;
}

} // namespace qbg
