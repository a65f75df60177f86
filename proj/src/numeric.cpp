#include "dgf/numeric.hpp"

#include <cstdlib>

namespace dgf {

std::size_t bigint_bit_cap() {
  static const std::size_t cap = [] {
    const char* env = std::getenv("DGF_MAX_BIGINT_BITS");
    if (env == nullptr || *env == '\0') return std::size_t(0);
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0')
      throw ParseError("DGF_MAX_BIGINT_BITS is not a non-negative integer");
    return std::size_t(v);
  }();
  return cap;
}

std::string int_to_string(const Int& x) { return x.get_str(); }

Int int_from_string(const std::string& s) {
  Int x;
  if (s.empty() || mpz_set_str(x.get_mpz_t(), s.c_str(), 10) != 0)
    throw ParseError("bad integer literal '" + s + "'");
  return x;
}

Rat::Rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw ContractViolation("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
  guard_size(Int(v_.get_num()));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ContractViolation("rational division by zero");
  v_ /= o.v_;
  guard_size(num());
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw ContractViolation("inverse of zero");
  return Rat(den(), num());
}

Int Rat::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Int Rat::ceil() const {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Int Rat::round_nearest() const {
  // Ties round down: x = k + 1/2 maps to k.
  const Rat shifted = *this + Rat(1, 2);
  if (shifted.is_integer()) return shifted.num() - 1;
  return shifted.floor();
}

std::string Rat::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rat Rat::from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(s));
  return Rat(int_from_string(s.substr(0, slash)), int_from_string(s.substr(slash + 1)));
}

Rat pow_int(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  const bool neg = e < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
  Rat r(n, d);
  return neg ? r.inverse() : r;
}

Rat rat_min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
Rat rat_max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

RatInterval::RatInterval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) throw ContractViolation("interval with lo > hi");
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
  const Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return {rat_min(rat_min(a, b), rat_min(c, d)), rat_max(rat_max(a, b), rat_max(c, d))};
}

RatInterval RatInterval::meet(const RatInterval& o) const {
  if (!intersects(o)) throw ContractViolation("meet of disjoint intervals");
  return {rat_max(lo, o.lo), rat_min(hi, o.hi)};
}

}  // namespace dgf
