#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "dap/error.hpp"

namespace dap {

enum class ModelKind { Rational, Gf, Quaternion };

/// Selects one of the three exact arithmetic models: the rationals, a prime
/// field GF(p), or quaternions with rational components (the non-commutative
/// witness). All arithmetic is exact; there are no tolerances anywhere.
struct ModelConfig {
  ModelKind kind = ModelKind::Rational;
  std::uint32_t p = 0;  // modulus, Gf only

  static ModelConfig rational() { return {ModelKind::Rational, 0}; }
  static ModelConfig quaternion() { return {ModelKind::Quaternion, 0}; }
  static ModelConfig gf(std::uint32_t p);  // rejects composite p

  bool commutative() const { return kind != ModelKind::Quaternion; }
  std::uint32_t characteristic() const { return kind == ModelKind::Gf ? p : 0; }

  std::string name() const;  // "rational", "gf(7)", "quaternion"
  /// CLI spelling: "rational", "gf:7", "quaternion".
  std::string flag() const;
  static ModelConfig parse_flag(std::string_view text);

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

/// Trial division; moduli are desk-scale (p < 10^4 in practice).
bool is_prime(std::uint64_t n);

/// An element of the active skew field, always in canonical form: reduced
/// fraction, least nonnegative residue, or reduced quaternion components.
/// Equality is structural equality of canonical forms.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar rational(mpq_class v);
  static Scalar rational(long num, long den = 1);
  static Scalar gf(std::uint32_t p, long long v);
  static Scalar quaternion(mpq_class w, mpq_class x, mpq_class y, mpq_class z);

  static Scalar zero(const ModelConfig& m);
  static Scalar one(const ModelConfig& m);
  /// The central element n·1 (n may be negative).
  static Scalar from_int(const ModelConfig& m, long long n);
  /// Parses the shared literal syntax: "a/b" or "a" (rational), an integer
  /// (gf), "a+bi+cj+dk" with rational coefficients (quaternion).
  static Scalar parse(const ModelConfig& m, std::string_view text);

  ModelConfig model() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  /// Two-sided multiplicative inverse; rejects zero.
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical literal form; Scalar::parse round-trips it.
  std::string str() const;

  /// Double approximation, render-time only (math decisions never use it).
  /// Quaternions project to their real component.
  double approx() const;

 private:
  struct GfElem {
    std::uint32_t p = 0;
    std::uint64_t v = 0;
    friend bool operator==(const GfElem&, const GfElem&) = default;
  };
  struct Quat {
    mpq_class w, x, y, z;
    friend bool operator==(const Quat& a, const Quat& b) {
      return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
  };

  using Payload = std::variant<mpq_class, GfElem, Quat>;
  explicit Scalar(Payload v) : v_(std::move(v)) {}

  Payload v_;
};

inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

/// n-fold sum a + a + ... + a for n >= 1. The multiple n·1 is central:
/// nat_multiple(n, a) == from_int(n)·a == a·from_int(n) in every model.
Scalar nat_multiple(unsigned n, const Scalar& a);

}  // namespace dap
