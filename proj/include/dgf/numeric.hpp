#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>

#include "dgf/errors.hpp"

namespace dgf {

using Int = mpz_class;

// Three-valued verdicts for oracle-backed strict comparisons.
enum class Tri { yes, no, undecided };

// DGF_MAX_BIGINT_BITS caps operand sizes as a safety valve; 0 = unlimited.
std::size_t bigint_bit_cap();

inline void guard_size(const Int& x) {
  const std::size_t cap = bigint_bit_cap();
  if (cap != 0 && mpz_sizeinbase(x.get_mpz_t(), 2) > cap)
    throw BigintCapExceeded("operand exceeds DGF_MAX_BIGINT_BITS = " + std::to_string(cap));
}

std::string int_to_string(const Int& x);
Int int_from_string(const std::string& s);

// Exact rational, always canonical: denominator > 0, gcd(|num|, den) = 1.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den);
  Rat(long num, long den) : Rat(Int(num), Int(den)) {}

  const Int num() const { return Int(v_.get_num()); }
  const Int den() const { return Int(v_.get_den()); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; guard_size(num()); return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat inverse() const;
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  Int floor() const;
  Int ceil() const;
  // Nearest integer; ties round down (deterministic).
  Int round_nearest() const;

  double to_double() const { return v_.get_d(); }
  std::string to_string() const;
  static Rat from_string(const std::string& s);

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

Rat pow_int(const Rat& base, long e);
Rat rat_min(const Rat& a, const Rat& b);
Rat rat_max(const Rat& a, const Rat& b);

// Closed rational interval [lo, hi]; arithmetic is exact, hence outward-exact.
struct RatInterval {
  Rat lo, hi;

  RatInterval() = default;
  RatInterval(Rat point) : lo(point), hi(point) {}  // NOLINT: point interval
  RatInterval(Rat lo_, Rat hi_);

  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / Rat(2); }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool intersects(const RatInterval& o) const { return lo <= o.hi && o.lo <= hi; }
  bool subset_of(const RatInterval& o) const { return o.lo <= lo && hi <= o.hi; }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator*(const RatInterval& o) const;
  RatInterval scale(const Rat& c) const { return c >= Rat(0) ? RatInterval(lo * c, hi * c) : RatInterval(hi * c, lo * c); }

  // Intersection; both must contain the same true value.
  RatInterval meet(const RatInterval& o) const;

  // Strict comparisons against a rational, three-valued.
  Tri greater_than(const Rat& x) const {
    if (lo > x) return Tri::yes;
    if (hi <= x) return Tri::no;
    return Tri::undecided;
  }
  Tri less_than(const Rat& x) const {
    if (hi < x) return Tri::yes;
    if (lo >= x) return Tri::no;
    return Tri::undecided;
  }
};

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::no || b == Tri::no) return Tri::no;
  if (a == Tri::undecided || b == Tri::undecided) return Tri::undecided;
  return Tri::yes;
}

struct IntVec2 {
  Int x, y;
  friend bool operator==(const IntVec2& a, const IntVec2& b) { return a.x == b.x && a.y == b.y; }
};

struct RatVec2 {
  Rat x, y;
  friend bool operator==(const RatVec2& a, const RatVec2& b) { return a.x == b.x && a.y == b.y; }
  RatVec2 operator+(const RatVec2& o) const { return {x + o.x, y + o.y}; }
  RatVec2 operator-(const RatVec2& o) const { return {x - o.x, y - o.y}; }
  RatVec2 scale(const Rat& c) const { return {x * c, y * c}; }
  Rat dot(const RatVec2& o) const { return x * o.x + y * o.y; }
};

// Enclosure of a point of R^2 (componentwise intervals).
struct IntervalVec2 {
  RatInterval x, y;
  IntervalVec2 operator+(const IntervalVec2& o) const { return {x + o.x, y + o.y}; }
  IntervalVec2 operator-(const IntervalVec2& o) const { return {x - o.x, y - o.y}; }
  IntervalVec2 scale(const Rat& c) const { return {x.scale(c), y.scale(c)}; }
  static IntervalVec2 point(const RatVec2& v) { return {RatInterval(v.x), RatInterval(v.y)}; }
};

}  // namespace dgf
