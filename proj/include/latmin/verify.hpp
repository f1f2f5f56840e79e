#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latmin/poset.hpp"
#include "latmin/set_function.hpp"

namespace latmin {

inline constexpr int kDefaultVerifyCap = 12;

enum class ViolationKind { Submodularity, MNatExchange, GeneralizedMatroid };

/// Certificate that an axiom fails. Re-evaluating the cited inequality
/// (or family memberships) on the host table/family reproduces the
/// violation. (x, y, i) is the first violation when subsets are scanned
/// in canonical order: increasing cardinality, numeric mask within a
/// size, i ascending.
struct ViolationWitness {
  ViolationKind kind;
  Mask x = 0;
  Mask y = 0;
  std::optional<int> i;

  /// Submodularity / exchange: f(X) + f(Y).
  long long lhs = 0;
  /// Submodularity: f(X|Y) + f(X&Y). Exchange: f(X-i) + f(Y+i).
  long long rhs = 0;

  struct TriedJ {
    int j;
    long long rhs;  // f(X-i+j) + f(Y+i-j); membership count for families
  };
  /// Every j in Y \ X, all of which failed.
  std::vector<TriedJ> tried_j;

  std::string describe() const;
};

/// nullopt iff f(X) + f(Y) >= f(X|Y) + f(X&Y) for all pairs.
/// Throws InfiniteValueError on -inf entries, SizeError beyond cap.
std::optional<ViolationWitness> is_submodular(const SetFunctionTable& f,
                                              int cap = kDefaultVerifyCap);

/// nullopt iff for every X, Y and i in X \ Y, either
/// f(X) + f(Y) <= f(X-i) + f(Y+i), or
/// f(X) + f(Y) <= f(X-i+j) + f(Y+i-j) for some j in Y \ X.
std::optional<ViolationWitness> is_mnat_concave(const SetFunctionTable& f,
                                                int cap = kDefaultVerifyCap);

/// { X : f(X) minimal }, -inf ordered below every integer.
SubsetFamily minimizers(const SetFunctionTable& f);

/// { X : f(X) maximal } over the finite entries.
SubsetFamily maximizers(const SetFunctionTable& f);

/// f(X) = 0 for every ideal X of p and f(X) > 0 otherwise.
/// Throws DimensionMismatchError when f.n != p.size().
bool check_min_condition(const SetFunctionTable& f, const Poset& p);

/// Simultaneous-exchange axiom for set families: for all A, B in F and
/// i in A \ B, either A-i and B+i are both in F, or some j in B \ A has
/// A-i+j and B+i-j both in F. Throws EmptyFamilyError.
std::optional<ViolationWitness> is_generalized_matroid(const SubsetFamily& f);

}  // namespace latmin
