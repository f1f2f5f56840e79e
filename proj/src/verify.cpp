#include "latmin/verify.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <vector>

namespace latmin {

namespace {

std::string set_str(Mask x) {
  std::string s = "{";
  bool first = true;
  for (int k = 0; x >> k; ++k)
    if ((x >> k) & 1u) {
      if (!first) s += ",";
      s += std::to_string(k + 1);
      first = false;
    }
  return s + "}";
}

void require_finite(const SetFunctionTable& f) {
  if (!f.all_finite())
    throw InfiniteValueError("table has -inf entries");
}

void require_cap(const SetFunctionTable& f, int cap) {
  if (f.n > cap)
    throw SizeError("verification: n exceeds cap " + std::to_string(cap));
}

// canonical scan order: increasing cardinality, numeric mask within a size
std::vector<Mask> canonical_order(int n) {
  std::vector<Mask> order;
  order.reserve(size_t{1} << n);
  for (Mask x = 0; x < (Mask{1} << n); ++x) order.push_back(x);
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) {
    return std::popcount(a) < std::popcount(b);
  });
  return order;
}

}  // namespace

std::string ViolationWitness::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ViolationKind::Submodularity:
      os << "submodularity violated at X=" << set_str(x) << " Y=" << set_str(y)
         << ": f(X)+f(Y)=" << lhs << " < " << rhs << "=f(X|Y)+f(X&Y)";
      break;
    case ViolationKind::MNatExchange:
      os << "exchange violated at X=" << set_str(x) << " Y=" << set_str(y)
         << " i=" << (i ? *i + 1 : 0) << ": f(X)+f(Y)=" << lhs
         << " > f(X-i)+f(Y+i)=" << rhs;
      for (const TriedJ& t : tried_j)
        os << "; j=" << t.j + 1 << " gives " << t.rhs;
      break;
    case ViolationKind::GeneralizedMatroid:
      os << "family exchange violated at A=" << set_str(x)
         << " B=" << set_str(y) << " i=" << (i ? *i + 1 : 0);
      for (const TriedJ& t : tried_j) os << "; j=" << t.j + 1 << " fails";
      break;
  }
  return os.str();
}

std::optional<ViolationWitness> is_submodular(const SetFunctionTable& f, int cap) {
  require_cap(f, cap);
  require_finite(f);
  const std::vector<Mask> order = canonical_order(f.n);
  for (Mask x : order)
    for (Mask y : order) {
      long long lhs = f[x].value() + f[y].value();
      long long rhs = f[x | y].value() + f[x & y].value();
      if (lhs < rhs) {
        ViolationWitness w;
        w.kind = ViolationKind::Submodularity;
        w.x = x;
        w.y = y;
        w.lhs = lhs;
        w.rhs = rhs;
        return w;
      }
    }
  return std::nullopt;
}

std::optional<ViolationWitness> is_mnat_concave(const SetFunctionTable& f, int cap) {
  require_cap(f, cap);
  require_finite(f);
  const std::vector<Mask> order = canonical_order(f.n);
  for (Mask x : order)
    for (Mask y : order) {
      Mask x_only = x & ~y;
      if (!x_only) continue;
      long long lhs = f[x].value() + f[y].value();
      for (int i = 0; i < f.n; ++i) {
        if (!((x_only >> i) & 1u)) continue;
        Mask bi = Mask{1} << i;
        long long rhs1 = f[x & ~bi].value() + f[y | bi].value();
        if (lhs <= rhs1) continue;
        ViolationWitness w;
        w.kind = ViolationKind::MNatExchange;
        w.x = x;
        w.y = y;
        w.i = i;
        w.lhs = lhs;
        w.rhs = rhs1;
        bool rescued = false;
        for (int j = 0; j < f.n && !rescued; ++j) {
          if (!(((y & ~x) >> j) & 1u)) continue;
          Mask bj = Mask{1} << j;
          long long rhs2 = f[(x & ~bi) | bj].value() + f[(y | bi) & ~bj].value();
          if (lhs <= rhs2)
            rescued = true;
          else
            w.tried_j.push_back({j, rhs2});
        }
        if (!rescued) return w;
      }
    }
  return std::nullopt;
}

SubsetFamily minimizers(const SetFunctionTable& f) {
  ExtInt best = f.values[0];
  for (const ExtInt& v : f.values)
    if (v < best) best = v;
  SubsetFamily out;
  out.n = f.n;
  for (Mask x = 0; x < f.values.size(); ++x)
    if (f[x] == best) out.members.push_back(x);
  return out;
}

SubsetFamily maximizers(const SetFunctionTable& f) {
  bool any = false;
  ExtInt best = ExtInt::neg_inf();
  for (const ExtInt& v : f.values)
    if (v.is_finite() && (!any || best < v)) {
      best = v;
      any = true;
    }
  if (!any) throw InfiniteValueError("table has no finite entry");
  SubsetFamily out;
  out.n = f.n;
  for (Mask x = 0; x < f.values.size(); ++x)
    if (f[x] == best) out.members.push_back(x);
  return out;
}

bool check_min_condition(const SetFunctionTable& f, const Poset& p) {
  if (f.n != p.size())
    throw DimensionMismatchError("table and poset sizes differ");
  for (Mask x = 0; x < f.values.size(); ++x) {
    ExtInt v = f[x];
    if (is_ideal(p, x)) {
      if (v != ExtInt(0)) return false;
    } else {
      if (!v.is_finite() || v.value() <= 0) return false;
    }
  }
  return true;
}

std::optional<ViolationWitness> is_generalized_matroid(const SubsetFamily& f) {
  if (f.members.empty()) throw EmptyFamilyError("family is empty");
  std::vector<Mask> order = f.members;
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (Mask a : order)
    for (Mask b : order) {
      Mask a_only = a & ~b;
      for (int i = 0; i < f.n; ++i) {
        if (!((a_only >> i) & 1u)) continue;
        Mask bi = Mask{1} << i;
        if (f.contains(a & ~bi) && f.contains(b | bi)) continue;
        ViolationWitness w;
        w.kind = ViolationKind::GeneralizedMatroid;
        w.x = a;
        w.y = b;
        w.i = i;
        bool rescued = false;
        for (int j = 0; j < f.n && !rescued; ++j) {
          if (!(((b & ~a) >> j) & 1u)) continue;
          Mask bj = Mask{1} << j;
          if (f.contains((a & ~bi) | bj) && f.contains((b | bi) & ~bj))
            rescued = true;
          else
            w.tried_j.push_back({j, 0});
        }
        if (!rescued) return w;
      }
    }
  return std::nullopt;
}

}  // namespace latmin
