#include "latmin/poset.hpp"

#include <algorithm>
#include <bit>

namespace latmin {

std::vector<int> mask_to_elements(Mask x) {
  std::vector<int> out;
  for (int k = 0; x >> k; ++k)
    if ((x >> k) & 1u) out.push_back(k);
  return out;
}

Mask elements_to_mask(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m |= Mask{1} << e;
  return m;
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw Error("poset: negative element count");
  Poset p(n);
  // strict reachability, Floyd-Warshall on bit rows
  std::vector<Mask> strict_below(static_cast<size_t>(n), 0);
  for (auto [j, i] : pairs) {
    if (j < 0 || j >= n || i < 0 || i >= n)
      throw Error("poset: relation index out of range");
    strict_below[i] |= Mask{1} << j;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((strict_below[i] >> k) & 1u) strict_below[i] |= strict_below[k];
  for (int i = 0; i < n; ++i)
    if ((strict_below[i] >> i) & 1u)
      throw CycleError("poset: relations contain a directed cycle");
  for (int i = 0; i < n; ++i)
    p.below_[i] = strict_below[i] | (Mask{1} << i);
  return p;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) {
      if (!less(j, i)) continue;
      // j covered by i: nothing strictly between
      bool covered = true;
      for (int k = 0; k < n_ && covered; ++k)
        if (less(j, k) && less(k, i)) covered = false;
      if (covered) out.emplace_back(j, i);
    }
  return out;
}

bool SubsetFamily::contains(Mask x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

SubsetFamily make_family(int n, std::vector<Mask> members) {
  Mask ground = (n >= 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  for (Mask m : members)
    if (m & ~ground) throw Error("family: member exceeds ground set");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SubsetFamily{n, std::move(members)};
}

bool is_ideal(const Poset& p, Mask x) {
  for (int i = 0; i < p.size(); ++i)
    if ((x >> i) & 1u) {
      if (p.below(i) & ~x) return false;
    }
  return true;
}

SubsetFamily enumerate_ideals(const Poset& p, int cap) {
  if (p.size() > cap)
    throw SizeError("enumerate_ideals: n exceeds cap " + std::to_string(cap));
  SubsetFamily f;
  f.n = p.size();
  Mask limit = Mask{1} << p.size();
  for (Mask x = 0; x < limit; ++x)
    if (is_ideal(p, x)) f.members.push_back(x);
  return f;
}

std::optional<int> max_chain_length(const Poset& p, int j, int i) {
  if (!p.leq(j, i)) return std::nullopt;
  // longest path DP over the interval {s : j <= s <= i}
  std::vector<int> interval;
  for (int s = 0; s < p.size(); ++s)
    if (p.leq(j, s) && p.leq(s, i)) interval.push_back(s);
  // process in order of principal-ideal size, a linear extension
  std::sort(interval.begin(), interval.end(), [&](int a, int b) {
    int ca = std::popcount(p.below(a)), cb = std::popcount(p.below(b));
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<int> height(static_cast<size_t>(p.size()), 0);
  int best = 0;
  for (int s : interval) {
    int h = 0;
    for (int t : interval)
      if (t != s && p.less(t, s)) h = std::max(h, height[t] + 1);
    height[s] = h;
    best = std::max(best, h);
  }
  return best;
}

bool is_union_intersection_closed(const SubsetFamily& f) {
  if (f.members.empty()) throw EmptyFamilyError("family is empty");
  for (Mask a : f.members)
    for (Mask b : f.members) {
      if (b >= a) break;  // unordered pairs suffice
      if (!f.contains(a | b) || !f.contains(a & b)) return false;
    }
  return true;
}

BirkhoffDecomposition join_irreducibles(const SubsetFamily& f) {
  if (!is_union_intersection_closed(f))
    throw NotLatticeError("family is not union/intersection closed");
  // lower covers in the inclusion order on f
  std::vector<Mask> irr;
  for (Mask b : f.members) {
    int covers = 0;
    for (Mask a : f.members) {
      if (a == b || (a & ~b)) continue;  // need a proper subset of b
      bool is_cover = true;
      for (Mask c : f.members)
        if (c != a && c != b && !(a & ~c) && !(c & ~b)) {
          is_cover = false;
          break;
        }
      if (is_cover) ++covers;
    }
    if (covers == 1) irr.push_back(b);
  }
  int m = static_cast<int>(irr.size());
  std::vector<std::pair<int, int>> rels;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && !(irr[a] & ~irr[b])) rels.emplace_back(a, b);
  return BirkhoffDecomposition{Poset::from_relations(m, rels), std::move(irr)};
}

bool verify_birkhoff_roundtrip(const Poset& p, int cap) {
  SubsetFamily ideals = enumerate_ideals(p, cap);
  BirkhoffDecomposition d = join_irreducibles(ideals);
  int n = p.size();
  if (static_cast<int>(d.irreducible_members.size()) != n) return false;
  // map x -> position of its principal ideal among the irreducibles
  std::vector<int> pos(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    auto it = std::find(d.irreducible_members.begin(),
                        d.irreducible_members.end(), p.below(x));
    if (it == d.irreducible_members.end()) return false;
    pos[x] = static_cast<int>(it - d.irreducible_members.begin());
  }
  // bijectivity
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (int x = 0; x < n; ++x) {
    if (hit[pos[x]]) return false;
    hit[pos[x]] = true;
  }
  // order-isomorphism against the decomposition's poset
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq(x, y) != d.poset.leq(pos[x], pos[y])) return false;
  return true;
}

}  // namespace latmin
