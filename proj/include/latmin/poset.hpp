#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latmin/errors.hpp"

namespace latmin {

/// Subsets of the ground set {0,...,n-1} as bitmasks; bit k is element k.
using Mask = std::uint32_t;

inline constexpr int kDefaultEnumCap = 20;

std::vector<int> mask_to_elements(Mask x);
Mask elements_to_mask(const std::vector<int>& elems);

/// Finite poset on elements 0..n-1 (presented 1-indexed at the boundary).
/// Stores the full reflexive-transitive relation; immutable.
class Poset {
 public:
  /// Builds the poset generated by the strict relations j < i for each
  /// pair (j, i). Pairs may be Hasse covers or any relations; the
  /// reflexive-transitive closure is taken. Throws CycleError if the
  /// closure would make some element strictly below itself.
  static Poset from_relations(int n, const std::vector<std::pair<int, int>>& pairs);

  int size() const { return n_; }

  /// j <= i in the order.
  bool leq(int j, int i) const { return (below_[i] >> j) & 1u; }

  /// j < i (strict).
  bool less(int j, int i) const { return j != i && leq(j, i); }

  /// Principal ideal of i as a mask: { j : j <= i }.
  Mask below(int i) const { return below_[i]; }

  /// Hasse cover pairs (j, i) with j covered by i, lexicographic order.
  std::vector<std::pair<int, int>> cover_pairs() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.below_ == b.below_;
  }

 private:
  explicit Poset(int n) : n_(n), below_(static_cast<size_t>(n), 0) {}

  int n_;
  std::vector<Mask> below_;  // below_[i] includes i itself
};

/// A duplicate-free collection of subsets of {0,...,n-1}, kept sorted
/// in canonical (numeric mask) order.
struct SubsetFamily {
  int n = 0;
  std::vector<Mask> members;

  bool contains(Mask x) const;
  size_t size() const { return members.size(); }

  friend bool operator==(const SubsetFamily& a, const SubsetFamily& b) {
    return a.n == b.n && a.members == b.members;
  }
};

/// Sorts and dedups members; validates they fit the ground set.
SubsetFamily make_family(int n, std::vector<Mask> members);

/// X is downward closed under <=.
bool is_ideal(const Poset& p, Mask x);

/// All ideals of p, in canonical subset order.
/// Throws SizeError when p.size() > cap.
SubsetFamily enumerate_ideals(const Poset& p, int cap = kDefaultEnumCap);

/// Longest chain between j and i: max |S|-1 over chains S with
/// j <= s <= i for all s in S. nullopt when j is not below i.
std::optional<int> max_chain_length(const Poset& p, int j, int i);

/// The family is closed under union and intersection of any two members
/// (equivalently, it is a distributive lattice under inclusion).
/// Throws EmptyFamilyError.
bool is_union_intersection_closed(const SubsetFamily& f);

struct BirkhoffDecomposition {
  /// Poset of the join-irreducibles under inclusion; element k of the
  /// poset corresponds to irreducible_members[k].
  Poset poset;
  std::vector<Mask> irreducible_members;  // canonical subset order
};

/// The members of f with exactly one lower cover in the inclusion order,
/// as a poset under inclusion. Throws NotLatticeError if f is not
/// union/intersection closed.
BirkhoffDecomposition join_irreducibles(const SubsetFamily& f);

/// Checks that x -> (principal ideal of x) is an order-isomorphism from
/// p onto the join-irreducibles of its ideal lattice.
bool verify_birkhoff_roundtrip(const Poset& p, int cap = kDefaultEnumCap);

}  // namespace latmin
