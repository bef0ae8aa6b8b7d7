#ifndef P1PARTS_COEFF_HPP
#define P1PARTS_COEFF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace p1parts {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The ground field: Q when characteristic is 0, otherwise F_p with p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;
  /// Throws Error when characteristic is neither 0 nor a prime below 2^31.
  explicit FieldSpec(std::uint64_t characteristic);

  static FieldSpec rationals() { return FieldSpec{}; }

  std::uint32_t characteristic() const { return p_; }
  bool isRational() const { return p_ == 0; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_ = 0;
};

bool isPrime(std::uint64_t n);

/// An exact field element in canonical form: a reduced fraction with positive
/// denominator over Q, or the least non-negative residue over F_p.
class Coefficient {
 public:
  Coefficient() = default;  // 0 in Q
  Coefficient(FieldSpec field, long value);
  Coefficient(FieldSpec field, const mpz_class& value);
  /// Over F_p the denominator is inverted; it must be nonzero mod p.
  Coefficient(FieldSpec field, const mpz_class& num, const mpz_class& den);

  static Coefficient zero(FieldSpec field) { return Coefficient(field, 0L); }
  static Coefficient one(FieldSpec field) { return Coefficient(field, 1L); }

  FieldSpec field() const { return field_; }
  bool isZero() const;
  bool isOne() const;

  /// Numerator/denominator; over F_p the residue and 1.
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::uint32_t residue() const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }

  Coefficient inverse() const;

  friend bool operator==(const Coefficient& a, const Coefficient& b);

  /// "5/6", "-3", "2"; residues print as their least non-negative value.
  std::string toString() const;

 private:
  void checkSameField(const Coefficient& o) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint32_t> value_{mpq_class(0)};
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Field arithmetic dispatch; throws Error on mixed fields or division by zero.
Coefficient fieldArith(const Coefficient& a, const Coefficient& b, ArithOp op);

/// Inverse of a nonzero residue modulo the prime p.
std::uint32_t primeFieldInv(std::uint32_t a, std::uint32_t p);

}  // namespace p1parts

#endif  // P1PARTS_COEFF_HPP
