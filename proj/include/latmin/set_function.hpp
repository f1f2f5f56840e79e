#pragma once

#include <vector>

#include "latmin/errors.hpp"
#include "latmin/ext_int.hpp"
#include "latmin/poset.hpp"

namespace latmin {

/// Exact values of a set function over all 2^n subsets, indexed by mask.
struct SetFunctionTable {
  int n = 0;
  std::vector<ExtInt> values;  // size 1 << n

  SetFunctionTable() : values(1, ExtInt(0)) {}
  SetFunctionTable(int n_, std::vector<ExtInt> values_)
      : n(n_), values(std::move(values_)) {}

  ExtInt operator[](Mask x) const { return values[x]; }
  size_t subset_count() const { return values.size(); }

  bool all_finite() const {
    for (const ExtInt& v : values)
      if (!v.is_finite()) return false;
    return true;
  }

  friend bool operator==(const SetFunctionTable& a, const SetFunctionTable& b) {
    return a.n == b.n && a.values == b.values;
  }
};

}  // namespace latmin
