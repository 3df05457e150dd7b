#include "qbg/flag.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include <json.hpp>

#include "qbg/diagrams.hpp"
#include "qbg/error.hpp"

namespace qbg {

struct Flag::Cache {
  std::mutex mutex;
  std::unordered_map<std::uint32_t, mpq_class> pluckers;
  std::unordered_map<std::uint64_t, int> ranks;
};

Flag::Flag(RationalMatrix m) : matrix_(std::move(m)), cache_(std::make_shared<Cache>()) {
  if (matrix_.rows() != matrix_.cols())
    throw PreconditionError("flag matrix must be square, got " + std::to_string(matrix_.rows()) +
                            "x" + std::to_string(matrix_.cols()));
  if (matrix_.rows() < 1 || matrix_.rows() > 32) throw PreconditionError("flag size out of range");
  if (determinant(matrix_) == 0) throw PreconditionError("flag matrix is singular");
}

mpq_class Flag::plucker(ValueSet rows) const {
  if (rows.empty()) return 1;
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->pluckers.find(rows.bits());
    if (it != cache_->pluckers.end()) return it->second;
  }
  mpq_class value = determinant(matrix_.submatrix(rows, rows.size()));
  std::lock_guard lock(cache_->mutex);
  cache_->pluckers.emplace(rows.bits(), value);
  return value;
}

mpq_class Flag::plucker(const Permutation& w) const {
  if (w.size() != n()) throw PreconditionError("permutation " + w.to_string() + " has wrong size");
  mpq_class product = 1;
  for (int k = 1; k < n() && product != 0; ++k) product *= plucker(prefix_set(w, k));
  return product;
}

int Flag::rank_region(ValueSet rows, int k) const {
  if (rows.empty() || k == 0) return 0;
  const std::uint64_t key = (std::uint64_t(k) << 32) | rows.bits();
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->ranks.find(key);
    if (it != cache_->ranks.end()) return it->second;
  }
  const int r = rank(matrix_.submatrix(rows, k));
  std::lock_guard lock(cache_->mutex);
  cache_->ranks.emplace(key, r);
  return r;
}

std::string Flag::plucker_json() const {
  if (n() > 7) throw ResourceError("full Plücker tables are limited to n<=7");
  nlohmann::json doc = nlohmann::json::object();
  for (int k = 0; k <= n(); ++k)
    for (ValueSet s : k_subsets(n(), k)) doc[s.to_string()] = plucker(s).get_str();
  return doc.dump(1) + "\n";
}

Flag flag_from_matrix(RationalMatrix m) { return Flag(std::move(m)); }

Flag fixed_point(const Permutation& w) { return Flag(RationalMatrix::permutation_matrix(w)); }

// --- incidence relations -----------------------------------------------------

namespace {

// Ordered index list with a sign, evaluated by sorting.
struct IndexList {
  int sign = 1;
  std::vector<int> list;

  void remove(int i) {
    const auto it = std::find(list.begin(), list.end(), i);
    if (it == list.end()) throw InternalError("removing an absent index");
    const auto k = list.size();
    const auto j = static_cast<std::size_t>(it - list.begin()) + 1;
    if ((k - j) % 2) sign = -sign;
    list.erase(it);
  }
  void append(int i) { list.push_back(i); }

  mpq_class value(const Flag& f) const {
    const SignedSet s = sort_indices(list);
    if (s.sign == 0) return 0;
    return (sign * s.sign) * f.plucker(s.set);
  }
};

IndexList from_set(ValueSet s) { return IndexList{1, s.elements()}; }

// Subsets of `s` of size m.
std::vector<ValueSet> sub_subsets(ValueSet s, int m) {
  const auto e = s.elements();
  std::vector<ValueSet> out;
  for (ValueSet mask : k_subsets(static_cast<int>(e.size()), m)) {
    ValueSet b;
    for (int pos : mask.elements()) b = b.with(e[pos - 1]);
    out.push_back(b);
  }
  return out;
}

} // namespace

mpq_class exchange_sum(const Flag& f, ValueSet i_set, ValueSet j_set) {
  mpq_class total = 0;
  for (int i : i_set.elements()) {
    IndexList left = from_set(i_set), right = from_set(j_set);
    left.remove(i);
    right.append(i);
    total += left.value(f) * right.value(f);
  }
  return total;
}

mpq_class incidence_defect(const Flag& f, ValueSet i_set, ValueSet j_set, ValueSet a_set) {
  if (!a_set.subset_of(j_set)) throw PreconditionError("A must be a subset of J");
  mpq_class rhs = 0;
  const auto a = a_set.elements();
  for (ValueSet b_set : sub_subsets(i_set, a_set.size())) {
    IndexList left = from_set(i_set), right = from_set(j_set);
    const auto b = b_set.elements();
    for (auto it = b.rbegin(); it != b.rend(); ++it) left.remove(*it);
    for (auto it = a.rbegin(); it != a.rend(); ++it) right.remove(*it);
    for (int x : a) left.append(x);
    for (int x : b) right.append(x);
    rhs += left.value(f) * right.value(f);
  }
  return f.plucker(i_set) * f.plucker(j_set) - rhs;
}

mpq_class exchange_defect(const Flag& f, ValueSet i_set, ValueSet j_set, int j) {
  IndexList jj = from_set(j_set);
  jj.append(j);
  mpq_class total = f.plucker(i_set) * jj.value(f);
  for (int i : i_set.elements()) {
    IndexList left = from_set(i_set), right = from_set(j_set);
    left.remove(i);
    left.append(j);
    right.append(i);
    total -= left.value(f) * right.value(f);
  }
  return total;
}

} // namespace qbg
