#pragma once

#include <memory>
#include <string>

#include "qbg/rational_matrix.hpp"

namespace qbg {

/// A complete flag, given by an invertible matrix whose first k columns span F_k.
/// Plücker coordinates and region ranks are computed on demand and cached; the
/// cache is shared between copies and guarded by a mutex.
class Flag {
public:
  /// Throws PreconditionError unless m is square and invertible.
  explicit Flag(RationalMatrix m);

  int n() const { return matrix_.rows(); }
  const RationalMatrix& matrix() const { return matrix_; }

  /// Minor on rows I, first |I| columns. P of the empty set is 1.
  mpq_class plucker(ValueSet rows) const;
  /// P_w = P_{w[1]} ... P_{w[n-1]}.
  mpq_class plucker(const Permutation& w) const;
  /// Rank of rows S, first k columns, i.e. dim of the projection of F_k onto S.
  int rank_region(ValueSet rows, int k) const;

  /// Every P_I as JSON keyed by "1,3,4"; the empty set is keyed "". Limited to n <= 7.
  std::string plucker_json() const;

private:
  struct Cache;
  RationalMatrix matrix_;
  std::shared_ptr<Cache> cache_;
};

Flag flag_from_matrix(RationalMatrix m);
/// e_w, the flag of the permutation matrix of w.
Flag fixed_point(const Permutation& w);

// --- incidence Plücker relations ---------------------------------------------

/// sum over i in I of P_{I-i} P_{J+i}.
mpq_class exchange_sum(const Flag& f, ValueSet i_set, ValueSet j_set);

/// P_I P_J - sum over B ⊆ I, |B| = |A| of P_{(I-B)+A} P_{(J-A)+B}, for A ⊆ J.
/// I - B removes the elements of B from the largest down; +A appends A increasingly.
mpq_class incidence_defect(const Flag& f, ValueSet i_set, ValueSet j_set, ValueSet a_set);

/// P_I P_{J+j} - sum over i in I of P_{I-i+j} P_{J+i}; zero when j is not in I and |J| < |I|.
mpq_class exchange_defect(const Flag& f, ValueSet i_set, ValueSet j_set, int j);

} // namespace qbg
