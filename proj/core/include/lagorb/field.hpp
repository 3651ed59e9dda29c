#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "lagorb/error.hpp"

namespace lagorb {

bool is_prime_u32(std::uint32_t p);

/// Which field a matrix lives over. Rationals stand in for the reals; small
/// prime fields are used by the exhaustive census.
struct FieldTag {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldTag rationals() { return {}; }
  static FieldTag prime(std::uint32_t p) {
    require(is_prime_u32(p), ErrorCode::Precondition, "field modulus must be prime");
    return {Kind::PrimeField, p};
  }

  bool is_rational() const { return kind == Kind::Rationals; }

  // "Q" or "F_<p>"
  std::string name() const;
  static FieldTag parse(const std::string& name);

  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

using Rational = mpq_class;

/// Residue modulo a small prime. The modulus travels with the value so a
/// matrix of residues never needs an external context.
class Zp {
 public:
  Zp() = default;
  Zp(std::int64_t value, std::uint32_t p) : p_(p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  Zp& operator+=(const Zp& o) {
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s % p_);
    return *this;
  }
  Zp& operator-=(const Zp& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + p_ - o.v_);
    return *this;
  }
  Zp& operator*=(const Zp& o) {
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % p_);
    return *this;
  }
  Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

  Zp operator-() const { return Zp(v_ == 0 ? 0 : p_ - v_, p_); }

  Zp inverse() const;

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_; }

 private:
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static Rational from_int(std::int64_t v, const FieldTag&) { return Rational(static_cast<long>(v)); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::string to_string(const Rational& x) { return x.get_str(); }
  static Rational parse(const std::string& text, const FieldTag& field);
  static bool compatible(const FieldTag& field) { return field.is_rational(); }
};

template <>
struct scalar_traits<Zp> {
  static Zp from_int(std::int64_t v, const FieldTag& field) { return Zp(v, field.p); }
  static bool is_zero(const Zp& x) { return x.value() == 0; }
  static std::string to_string(const Zp& x) { return std::to_string(x.value()); }
  static Zp parse(const std::string& text, const FieldTag& field);
  static bool compatible(const FieldTag& field) { return !field.is_rational(); }
};

template <class S>
bool is_zero(const S& x) {
  return scalar_traits<S>::is_zero(x);
}

}  // namespace lagorb
