#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace sing {

enum class FieldKind { Prime, Rational };

/// Base field descriptor: F_p for a prime p < 2^31, or the rationals.
class Field {
 public:
  static Field prime(std::uint32_t p);
  static Field rational() { return Field(FieldKind::Rational, 0); }

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == FieldKind::Prime; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

void require_same_field(const Field& a, const Field& b);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

/// An element of a Field.  Prime residues live in [0, p); rationals are kept
/// canonical (lowest terms, positive denominator) by GMP.
class Scalar {
 public:
  Scalar(const Field& field, std::int64_t value);
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& f) { return Scalar(f, std::int64_t{0}); }
  static Scalar one(const Field& f) { return Scalar(f, std::int64_t{1}); }
  static Scalar residue(const Field& f, std::uint64_t r);
  /// Parses "k" or "a/b".  Over F_p the value a·b^{-1} mod p is taken.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const noexcept { return field_; }
  std::uint64_t residue() const noexcept { return res_; }
  const mpq_class& rational() const noexcept { return rat_; }

  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;
  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Field field_;
  std::uint64_t res_ = 0;
  mpq_class rat_;
};

}  // namespace sing
