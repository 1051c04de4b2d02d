#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace odokit {

// Exact nonnegative magnitude: the carrier for metric values, pseudo-orbit
// defects and schedule bounds. Symbolic and odometer metrics produce dyadics
// 2^-k, grid metrics general rationals p/q, schedule tails dyadic sums; all
// arithmetic and comparisons are exact.
class Mag {
public:
  Mag() : v_(0) {}

  static Mag zero() { return Mag(); }
  static Mag one();
  static Mag pow2(long k);  // 2^-k, k >= 0
  static Mag ratio(std::int64_t num, std::int64_t den);
  static Mag from_mpq(mpq_class v);

  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool positive() const { return sgn(v_) > 0; }

  // k when the value is exactly 2^-k with k >= 0 (1 gives 0), else nullopt.
  std::optional<long> pow2_exponent() const;

  // Least j >= 0 with 2^-j <= value. Requires a positive value.
  long level() const;

  Mag operator+(const Mag& o) const { return from_mpq(v_ + o.v_); }
  Mag operator*(const Mag& o) const { return from_mpq(v_ * o.v_); }
  Mag half() const;
  Mag twice() const;

  friend bool operator==(const Mag& a, const Mag& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Mag& a, const Mag& b) { return a.v_ != b.v_; }
  friend bool operator<(const Mag& a, const Mag& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Mag& a, const Mag& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Mag& a, const Mag& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Mag& a, const Mag& b) { return a.v_ >= b.v_; }

  // "0", "1", "2^-k" for pure dyadics, otherwise "p/q".
  std::string str() const;
  static Mag parse(const std::string& text);

private:
  explicit Mag(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;  // canonical, >= 0
};

Mag max(const Mag& a, const Mag& b);
Mag min(const Mag& a, const Mag& b);

}  // namespace odokit
