#include "sing/field.hpp"

#include "sing/error.hpp"

namespace sing {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorCode::InadmissibleRelation: return "InadmissibleRelation";
    case ErrorCode::NotMonomial: return "NotMonomial";
    case ErrorCode::NotQuadraticMonomial: return "NotQuadraticMonomial";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorCode::BackendNotLinear: return "BackendNotLinear";
    case ErrorCode::NotStrictlyStable: return "NotStrictlyStable";
    case ErrorCode::NotSelfInjective: return "NotSelfInjective";
    case ErrorCode::NotRadicalSquareZero: return "NotRadicalSquareZero";
    case ErrorCode::ShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::RelationNotParallel: return "RelationNotParallel";
    case ErrorCode::MatrixShapeMismatch: return "MatrixShapeMismatch";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::RelationNotSatisfied: return "RelationNotSatisfied";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_prime_number(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_number(p))
    throw Error(ErrorCode::SchemaError, "field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return Field(FieldKind::Prime, p);
}

std::string Field::to_string() const {
  return is_prime() ? "F_" + std::to_string(p_) : "Q";
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(ErrorCode::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error(ErrorCode::Singular, "residue has no inverse");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Scalar::Scalar(const Field& field, std::int64_t value) : field_(field) {
  if (field_.is_prime()) {
    std::int64_t p = field_.characteristic();
    std::int64_t r = value % p;
    if (r < 0) r += p;
    res_ = static_cast<std::uint64_t>(r);
  } else {
    rat_ = mpq_class(mpz_class(static_cast<long>(value)));
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field) {
  if (field_.is_prime()) {
    mpz_class p = field_.characteristic();
    mpz_class num = value.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = value.get_den() % p;
    if (den == 0) throw Error(ErrorCode::Singular, "denominator divisible by the characteristic");
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    res_ = n * mod_inverse(d, field_.characteristic()) % field_.characteristic();
  } else {
    rat_ = value;
    rat_.canonicalize();
  }
}

Scalar Scalar::residue(const Field& f, std::uint64_t r) {
  Scalar s = zero(f);
  s.res_ = r % f.characteristic();
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorCode::SchemaError, "malformed scalar '" + text + "'");
  q.canonicalize();
  return Scalar(f, q);
}

bool Scalar::is_zero() const { return field_.is_prime() ? res_ == 0 : sgn(rat_) == 0; }
bool Scalar::is_one() const { return field_.is_prime() ? res_ == 1 : rat_ == 1; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Singular, "inverse of zero");
  if (field_.is_prime()) return residue(field_, mod_inverse(res_, field_.characteristic()));
  return Scalar(field_, mpq_class(1) / rat_);
}

std::string Scalar::to_string() const {
  return field_.is_prime() ? std::to_string(res_) : rat_.get_str(10);
}

Scalar Scalar::operator-() const {
  if (field_.is_prime()) return residue(field_, res_ == 0 ? 0 : field_.characteristic() - res_);
  return Scalar(field_, mpq_class(-rat_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  if (a.field_.is_prime()) return Scalar::residue(a.field_, a.res_ + b.res_);
  return Scalar(a.field_, mpq_class(a.rat_ + b.rat_));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  if (a.field_.is_prime()) return Scalar::residue(a.field_, a.res_ * b.res_);
  return Scalar(a.field_, mpq_class(a.rat_ * b.rat_));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_prime() ? a.res_ == b.res_ : a.rat_ == b.rat_;
}

}  // namespace sing
