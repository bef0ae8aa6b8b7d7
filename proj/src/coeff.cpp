#include "p1parts/coeff.hpp"

#include <limits>

namespace p1parts {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic) {
  if (characteristic != 0) {
    if (characteristic >= (std::uint64_t{1} << 31))
      throw Error("characteristic " + std::to_string(characteristic) + " must be below 2^31");
    if (!isPrime(characteristic))
      throw Error("characteristic " + std::to_string(characteristic) + " is not prime");
  }
  p_ = static_cast<std::uint32_t>(characteristic);
}

namespace {

std::uint32_t reduceMod(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

std::uint32_t primeFieldInv(std::uint32_t a, std::uint32_t p) {
  if (p == 0) throw Error("primeFieldInv: modulus must be prime");
  a %= p;
  if (a == 0) throw Error("division by zero in F_" + std::to_string(p));
  // extended Euclid on signed 64-bit values
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  std::int64_t inv = s0 % static_cast<std::int64_t>(p);
  if (inv < 0) inv += p;
  return static_cast<std::uint32_t>(inv);
}

Coefficient::Coefficient(FieldSpec field, long value) : field_(field) {
  if (field_.isRational()) {
    value_ = mpq_class(value);
  } else {
    std::int64_t p = field_.characteristic();
    std::int64_t r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint32_t>(r);
  }
}

Coefficient::Coefficient(FieldSpec field, const mpz_class& value) : field_(field) {
  if (field_.isRational())
    value_ = mpq_class(value);
  else
    value_ = reduceMod(value, field_.characteristic());
}

Coefficient::Coefficient(FieldSpec field, const mpz_class& num, const mpz_class& den)
    : field_(field) {
  if (den == 0) throw Error("zero denominator");
  if (field_.isRational()) {
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    std::uint32_t p = field_.characteristic();
    std::uint32_t d = reduceMod(den, p);
    if (d == 0) throw Error("denominator vanishes in F_" + std::to_string(p));
    std::uint64_t n = reduceMod(num, p);
    value_ = static_cast<std::uint32_t>(n * primeFieldInv(d, p) % p);
  }
}

bool Coefficient::isZero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Coefficient::isOne() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

mpz_class Coefficient::numerator() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_num();
  return mpz_class(static_cast<unsigned long>(std::get<std::uint32_t>(value_)));
}

mpz_class Coefficient::denominator() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_den();
  return mpz_class(1);
}

std::uint32_t Coefficient::residue() const {
  if (field_.isRational()) throw Error("residue() requested for a rational coefficient");
  return std::get<std::uint32_t>(value_);
}

void Coefficient::checkSameField(const Coefficient& o) const {
  if (!(field_ == o.field_))
    throw Error("mixed-field operands: characteristic " +
                std::to_string(field_.characteristic()) + " vs " +
                std::to_string(o.field_.characteristic()));
}

Coefficient Coefficient::operator-() const {
  Coefficient r = *this;
  if (auto* q = std::get_if<mpq_class>(&r.value_)) {
    *q = -*q;
  } else {
    auto& v = std::get<std::uint32_t>(r.value_);
    if (v != 0) v = field_.characteristic() - v;
  }
  return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  checkSameField(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
  } else {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(o.value_);
    if (s >= field_.characteristic()) s -= field_.characteristic();
    value_ = static_cast<std::uint32_t>(s);
  }
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) { return *this += -o; }

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  checkSameField(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
  } else {
    std::uint64_t m = std::uint64_t{std::get<std::uint32_t>(value_)} * std::get<std::uint32_t>(o.value_);
    value_ = static_cast<std::uint32_t>(m % field_.characteristic());
  }
  return *this;
}

Coefficient Coefficient::inverse() const {
  if (isZero()) throw Error("division by zero");
  Coefficient r = *this;
  if (auto* q = std::get_if<mpq_class>(&r.value_))
    *q = 1 / *q;
  else
    r.value_ = primeFieldInv(std::get<std::uint32_t>(value_), field_.characteristic());
  return r;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  checkSameField(o);
  return *this *= o.inverse();
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Coefficient::toString() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint32_t>(value_));
}

Coefficient fieldArith(const Coefficient& a, const Coefficient& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error("unknown arithmetic operation");
}

}  // namespace p1parts
