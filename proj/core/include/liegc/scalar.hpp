#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace liegc {

using Rational = mpq_class;

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionByZero : ScalarError {
  DivisionByZero() : ScalarError("division by zero") {}
};
struct InvalidRadicand : ScalarError {
  explicit InvalidRadicand(std::uint64_t r)
      : ScalarError("invalid radicand " + std::to_string(r)), radicand(r) {}
  std::uint64_t radicand;
};
struct RadicandMissing : ScalarError {
  explicit RadicandMissing(std::uint64_t r)
      : ScalarError("radicand " + std::to_string(r) + " not declared in field tower"),
        radicand(r) {}
  std::uint64_t radicand;
};
struct TowerMismatch : ScalarError {
  TowerMismatch() : ScalarError("operands belong to different field towers") {}
};
struct ScalarParseError : ScalarError {
  ScalarParseError(const std::string& what, std::size_t pos)
      : ScalarError("scalar parse error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
  std::size_t position;
};

/// The field Q(i)(sqrt(r_1),...,sqrt(r_m)).  Radicands are distinct
/// squarefree integers >= 2; they need not be multiplicatively independent
/// (e.g. {2,3,6} is allowed, which is what makes products like
/// sqrt(2)*sqrt(3) representable once sqrt(6) is declared).
class FieldSpec {
public:
  FieldSpec() = default;
  explicit FieldSpec(std::vector<std::uint64_t> radicands);

  // Smallest declaration set containing `seed` and closed under
  // products sqrt(r)*sqrt(s) = gcd * sqrt(rs/gcd^2).  Division inside the
  // resulting tower never leaves it.
  static FieldSpec product_closure(std::vector<std::uint64_t> seed);

  const std::vector<std::uint64_t>& radicands() const { return radicands_; }
  bool allows(std::uint64_t radical) const;
  // Degree over Q of the field generated by i and the declared radicands.
  std::uint64_t tower_degree() const;

  bool operator==(const FieldSpec& o) const { return radicands_ == o.radicands_; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

private:
  std::vector<std::uint64_t> radicands_;  // sorted
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// Element of Q(i)(sqrt(r_1),...,sqrt(r_m)) in canonical form: a sum of
/// terms q * i^e * sqrt(S) with rational q, e in {0,1} and S squarefree.
/// Distinct monomials i^e*sqrt(S) are linearly independent over Q, so the
/// zero test and equality are exact.  Immutable value type.
class Scalar {
public:
  Scalar() = default;  // zero
  Scalar(long n);
  Scalar(const Rational& q);
  Scalar(long num, long den);

  static Scalar i();
  // sqrt(r) in the given tower; r must be declared there.
  static Scalar sqrt(std::uint64_t r, FieldSpecPtr spec);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  bool is_real() const;
  Rational rational_value() const;  // requires is_rational()

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // DivisionByZero, RadicandMissing
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar conjugate() const;  // i -> -i, sqrt(r) fixed
  std::pair<Scalar, Scalar> real_imag() const;
  Scalar real_part() const { return real_imag().first; }
  Scalar imag_part() const { return real_imag().second; }

  FieldSpecPtr field() const { return spec_; }
  Scalar with_field(FieldSpecPtr spec) const;  // re-police against spec

  // Rendering: "q * i^1 * sqrt(r)^1 + ..." with q in p/q form; "0" for zero.
  std::string str() const;
  static Scalar parse(const std::string& text, FieldSpecPtr spec = nullptr);

  double to_double() const;  // display only (CLI); not used by the core math

private:
  // key = (radical << 1) | i_exponent; radical squarefree >= 1
  using Key = std::uint64_t;
  using Term = std::pair<Key, Rational>;
  std::vector<Term> terms_;  // sorted by key, no zero coefficients
  FieldSpecPtr spec_;

  static Scalar raw_mul(const Scalar& a, const Scalar& b);
  static Scalar raw_inverse(const Scalar& a);
  void insert_term(Key k, const Rational& q);
  void police(const FieldSpecPtr& spec) const;
  static FieldSpecPtr merge_specs(const FieldSpecPtr& a, const FieldSpecPtr& b);

  friend struct ScalarTestAccess;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }
inline Scalar operator+(long n, const Scalar& s) { return Scalar(n) + s; }
inline Scalar operator-(long n, const Scalar& s) { return Scalar(n) - s; }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Squarefree factorization helpers over machine integers.
std::uint64_t squarefree_part(std::uint64_t n, std::uint64_t* square_root_factor = nullptr);
bool is_squarefree(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace liegc
