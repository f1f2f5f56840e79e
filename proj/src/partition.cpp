#include "latmin/partition.hpp"

#include <cmath>

namespace latmin {

void DyadicSum::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

DyadicSum DyadicSum::pow2(long long e) {
  DyadicSum d;
  if (e >= 0) {
    d.num_ = BigInt(1) << static_cast<unsigned>(e);
    d.exp_ = 0;
  } else {
    d.num_ = 1;
    d.exp_ = static_cast<unsigned>(-e);
  }
  return d;
}

DyadicSum& DyadicSum::operator+=(const DyadicSum& other) {
  unsigned e = std::max(exp_, other.exp_);
  num_ = (num_ << (e - exp_)) + (other.num_ << (e - other.exp_));
  exp_ = e;
  normalize();
  return *this;
}

BigInt DyadicSum::denominator() const { return BigInt(1) << exp_; }

std::string DyadicSum::str() const {
  return num_.str() + "/" + denominator().str();
}

BigInt DyadicSum::nearest_integer() const {
  // floor((num + 2^(e-1)) / 2^e); exact for the nonnegative sums used here
  if (exp_ == 0) return num_;
  return (num_ + (BigInt(1) << (exp_ - 1))) >> exp_;
}

bool DyadicSum::within_quarter_of(const BigInt& k) const {
  BigInt diff = num_ - (k << exp_);  // (this - k) * 2^exp
  if (diff < 0) diff = -diff;
  return diff * 4 <= denominator();
}

double DyadicSum::to_double() const {
  return num_.convert_to<double>() / denominator().convert_to<double>();
}

double g_r(const SetFunctionTable& f, double r, Mask x) {
  ExtInt v = f[x];
  if (!v.is_finite()) throw InfiniteValueError("g_r: f(X) is -inf");
  return std::exp(-r * static_cast<double>(v.value()));
}

DyadicSum partition_sum_dyadic(const SetFunctionTable& f) {
  DyadicSum sum;
  for (Mask x = 0; x < f.values.size(); ++x) {
    ExtInt v = f[x];
    if (!v.is_finite() || v.value() < 0)
      throw InfiniteValueError("partition sum requires finite entries >= 0");
    sum += DyadicSum::pow2(-static_cast<long long>(f.n + 2) * v.value());
  }
  return sum;
}

unsigned long long estimate_ideal_count(const SetFunctionTable& f) {
  return partition_sum_dyadic(f).nearest_integer().convert_to<unsigned long long>();
}

Poset bis_to_poset(const BipartiteGraphPlain& g) {
  std::vector<std::pair<int, int>> rels;
  for (auto [a, b] : g.edges) {
    if (a < 0 || a >= g.a_size || b < 0 || b >= g.b_size)
      throw Error("bipartite graph: edge endpoint out of range");
    rels.emplace_back(a, g.a_size + b);
  }
  return Poset::from_relations(g.a_size + g.b_size, rels);
}

unsigned long long count_bis_bruteforce(const BipartiteGraphPlain& g, int cap) {
  const int n = g.a_size + g.b_size;
  if (n > cap)
    throw SizeError("independent-set count: graph larger than cap " +
                    std::to_string(cap));
  unsigned long long count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool independent = true;
    for (auto [a, b] : g.edges)
      if (((s >> a) & 1u) && ((s >> (g.a_size + b)) & 1u)) {
        independent = false;
        break;
      }
    if (independent) ++count;
  }
  return count;
}

}  // namespace latmin
