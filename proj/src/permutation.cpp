#include "qbg/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "qbg/error.hpp"

namespace qbg {

ValueSet ValueSet::of(std::initializer_list<int> values) {
  ValueSet s;
  for (int v : values) s = s.with(v);
  return s;
}

ValueSet ValueSet::of(const std::vector<int>& values) {
  ValueSet s;
  for (int v : values) s = s.with(v);
  return s;
}

std::vector<int> ValueSet::elements() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1)
    out.push_back(__builtin_ctz(b) + 1);
  return out;
}

std::string ValueSet::to_string() const {
  std::string out;
  for (int v : elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::vector<ValueSet> k_subsets(int n, int k) {
  std::vector<ValueSet> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {ValueSet()};
  // Gosper's hack over n-bit masks.
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    out.emplace_back(static_cast<std::uint32_t>(s));
    std::uint64_t c = s & -s;
    std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

std::string to_string(const Root& t) {
  return "e" + std::to_string(t.i) + "-e" + std::to_string(t.j);
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  if (n < 1) throw PreconditionError("permutation must have n >= 1");
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n)
      throw PreconditionError("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    if (seen[v]) throw PreconditionError("duplicate value " + std::to_string(v));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 0; i < size(); ++i) inv[word_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<int> out(word_.size());
  for (int i = 0; i < size(); ++i) out[i] = word_[rhs.word_[i] - 1];
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = size() <= 9;
  for (int v : word_) {
    if (!digits && !out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw ParseError("empty permutation");

  std::vector<std::string_view> tokens;
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) tokens.push_back(text.substr(i, 1));
    if (tokens.size() > 9)
      throw ParseError("digit-string permutations are limited to n <= 9; use commas: '" +
                       std::string(text) + "'");
  } else {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = text.find(',', start);
      tokens.push_back(trim(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }

  const int n = static_cast<int>(tokens.size());
  std::vector<int> word;
  std::vector<bool> seen(n + 1, false);
  for (auto tok : tokens) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("invalid token '" + std::string(tok) + "'");
    if (v < 1 || v > n)
      throw ParseError("token '" + std::string(tok) + "' out of range 1.." + std::to_string(n));
    if (seen[v]) throw ParseError("duplicate value '" + std::string(tok) + "'");
    seen[v] = true;
    word.push_back(v);
  }
  return Permutation(std::move(word));
}

int coxeter_length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

Permutation apply_transposition(const Permutation& w, const Root& t) {
  std::vector<int> word = w.word();
  std::swap(word[t.i - 1], word[t.j - 1]);
  return Permutation(std::move(word));
}

ValueSet prefix_set(const Permutation& w, int k) {
  ValueSet s;
  for (int i = 1; i <= k; ++i) s = s.with(w(i));
  return s;
}

Permutation long_cycle_rotate(const Permutation& w) {
  const int n = w.size();
  std::vector<int> word = w.word();
  for (int& v : word) v = v % n + 1;
  return Permutation(std::move(word));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::size_t lex_rank(const Permutation& w) {
  const int n = w.size();
  std::size_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++smaller;
    rank = rank * static_cast<std::size_t>(n - i + 1) + smaller;
  }
  return rank;
}

ValueSet CyclicInterval::members() const {
  auto norm = [this](int x) { return x == 0 ? n : x; };
  const int lo = norm(a);
  const int hi = norm(b);
  ValueSet s;
  if (lo == hi) {
    if (openness == Openness::closed) s = s.with(lo);
    return s;
  }
  for (int k = lo;; k = k % n + 1) {
    s = s.with(k);
    if (k == hi) break;
  }
  if (openness == Openness::open || openness == Openness::half_open_left) s = s.without(lo);
  if (openness == Openness::open || openness == Openness::half_open_right) s = s.without(hi);
  return s;
}

bool cyclic_contains(const CyclicInterval& interval, int k) {
  return interval.members().contains(k);
}

bool shifted_less(int r, int a, int b, int n) {
  return shifted_rank(r, a, n) < shifted_rank(r, b, n);
}

Permutation word_product(const std::vector<int>& word, int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  // Right-multiplying by s_a swaps positions a and a+1.
  for (int a : word) {
    if (a < 1 || a >= n) throw PreconditionError("generator s_" + std::to_string(a) + " not in S_" + std::to_string(n));
    std::swap(w[a - 1], w[a]);
  }
  return Permutation(std::move(w));
}

namespace {

void collect_reduced_words(const Permutation& w, std::vector<int>& suffix,
                           std::vector<std::vector<int>>& out) {
  bool identity = true;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) {
      identity = false;
      suffix.push_back(i);
      collect_reduced_words(apply_transposition(w, {i, i + 1}), suffix, out);
      suffix.pop_back();
    }
  }
  if (identity) out.emplace_back(suffix.rbegin(), suffix.rend());
}

} // namespace

std::vector<std::vector<int>> reduced_words(const Permutation& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  collect_reduced_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Root> reflection_ordering(const std::vector<int>& reduced_word, int n) {
  const int top = n * (n - 1) / 2;
  if (static_cast<int>(reduced_word.size()) != top)
    throw PreconditionError("word has length " + std::to_string(reduced_word.size()) +
                            ", a reduced word for w_0 needs " + std::to_string(top));
  if (coxeter_length(word_product(reduced_word, n)) != top)
    throw PreconditionError("word is not a reduced word for w_0");

  std::vector<Root> ordering;
  for (std::size_t k = 0; k < reduced_word.size(); ++k) {
    // alpha_{a_k} = e_a - e_{a+1}, then apply s_{a_{k-1}}, ..., s_{a_1}.
    int x = reduced_word[k];
    int y = x + 1;
    for (std::size_t m = k; m-- > 0;) {
      const int s = reduced_word[m];
      auto act = [s](int e) { return e == s ? s + 1 : (e == s + 1 ? s : e); };
      x = act(x);
      y = act(y);
    }
    if (x > y) throw InternalError("reflection ordering produced a negative root");
    ordering.push_back({x, y});
  }
  return ordering;
}

bool is_reflection_ordering(const std::vector<Root>& ordering, int n) {
  std::vector<int> pos(static_cast<std::size_t>(n + 1) * (n + 1), -1);
  auto at = [&](int i, int j) -> int& { return pos[static_cast<std::size_t>(i) * (n + 1) + j]; };
  if (static_cast<int>(ordering.size()) != n * (n - 1) / 2) return false;
  for (std::size_t p = 0; p < ordering.size(); ++p) {
    const auto [i, j] = ordering[p];
    if (i < 1 || i >= j || j > n || at(i, j) != -1) return false;
    at(i, j) = static_cast<int>(p);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const int ij = at(i, j), ik = at(i, k), jk = at(j, k);
        if (!((ij < ik && ik < jk) || (jk < ik && ik < ij))) return false;
      }
  return true;
}

} // namespace qbg
