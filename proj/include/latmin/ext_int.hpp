#pragma once

#include <string>

namespace latmin {

/// Integer extended with a -inf sentinel ordered below every integer.
/// Addition absorbs -inf.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(long long v) : v_(v) {}

  static constexpr ExtInt neg_inf() {
    ExtInt e;
    e.finite_ = false;
    return e;
  }

  constexpr bool is_finite() const { return finite_; }

  /// Finite value; only meaningful when is_finite().
  constexpr long long value() const { return v_; }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend constexpr bool operator!=(ExtInt a, ExtInt b) { return !(a == b); }
  friend constexpr bool operator<(ExtInt a, ExtInt b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend constexpr bool operator<=(ExtInt a, ExtInt b) { return !(b < a); }
  friend constexpr bool operator>=(ExtInt a, ExtInt b) { return !(a < b); }

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (!a.finite_ || !b.finite_) return neg_inf();
    return ExtInt(a.v_ + b.v_);
  }

  std::string str() const {
    return finite_ ? std::to_string(v_) : std::string("-inf");
  }

 private:
  bool finite_ = true;
  long long v_ = 0;
};

}  // namespace latmin
