#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "latmin/poset.hpp"
#include "latmin/set_function.hpp"

namespace latmin {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with a power-of-two denominator. No rounding anywhere.
class DyadicSum {
 public:
  DyadicSum() = default;  // zero

  /// 2^e, e possibly negative.
  static DyadicSum pow2(long long e);

  DyadicSum& operator+=(const DyadicSum& other);
  friend DyadicSum operator+(DyadicSum a, const DyadicSum& b) {
    a += b;
    return a;
  }

  BigInt numerator() const { return num_; }
  BigInt denominator() const;

  /// "numerator/denominator", e.g. "163/32"; integers as "k/1".
  std::string str() const;

  /// Nearest integer (ties round up; the sums here never tie).
  BigInt nearest_integer() const;

  /// |*this - k| <= 1/4, exactly.
  bool within_quarter_of(const BigInt& k) const;

  double to_double() const;

  friend bool operator==(const DyadicSum& a, const DyadicSum& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }

 private:
  void normalize();

  BigInt num_ = 0;
  unsigned exp_ = 0;  // value = num_ / 2^exp_
};

/// exp(-r * f(X)). Tends to the indicator of f(X) = 0 as r grows.
/// Throws InfiniteValueError when f(X) is -inf.
double g_r(const SetFunctionTable& f, double r, Mask x);

/// Exact sum over all X of 2^(-(n+2) * f(X)), i.e. the partition sum at
/// r = (n+2) ln 2. Requires all entries finite and >= 0.
DyadicSum partition_sum_dyadic(const SetFunctionTable& f);

/// Nearest integer to partition_sum_dyadic(f). Equals the ideal count of
/// the underlying poset whenever f is zero exactly on the ideals and
/// positive elsewhere (the fractional part is then at most 1/4).
unsigned long long estimate_ideal_count(const SetFunctionTable& f);

/// Unweighted bipartite graph (A, B), sides 0-indexed, no duplicate edges.
struct BipartiteGraphPlain {
  int a_size = 0;
  int b_size = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Height-<=2 poset on A then B (elements 0..a-1 then a..a+b-1) with
/// a < b for every edge. (S, T) -> (A \ S) union T is a bijection from
/// independent sets of g onto ideals of the result.
Poset bis_to_poset(const BipartiteGraphPlain& g);

/// Exact count of independent sets of g. Test oracle; throws SizeError
/// when a_size + b_size exceeds cap.
unsigned long long count_bis_bruteforce(const BipartiteGraphPlain& g,
                                        int cap = kDefaultEnumCap);

}  // namespace latmin
