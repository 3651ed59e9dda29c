#include "lagorb/field.hpp"

#include <cctype>

namespace lagorb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Range: return "range";
    case ErrorCode::Shape: return "shape";
    case ErrorCode::Singular: return "singular";
    case ErrorCode::NotSameOrbit: return "not_same_orbit";
    case ErrorCode::InvalidGraph: return "invalid_graph";
    case ErrorCode::InvalidElement: return "invalid_element";
    case ErrorCode::NotInL00: return "not_in_L00";
    case ErrorCode::NoDeeperStratum: return "no_deeper_stratum";
    case ErrorCode::NoRationalWitness: return "no_rational_witness";
    case ErrorCode::TooLarge: return "too_large";
    case ErrorCode::Schema: return "schema";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string FieldTag::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p);
}

FieldTag FieldTag::parse(const std::string& name) {
  if (name == "Q") return rationals();
  if (name.size() > 2 && name.compare(0, 2, "F_") == 0) {
    std::uint64_t p = 0;
    for (std::size_t i = 2; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i])) || p > 0xffffffffULL / 10)
        fail(ErrorCode::Schema, "bad field name: " + name);
      p = p * 10 + static_cast<std::uint64_t>(name[i] - '0');
    }
    if (p > 0xffffffffULL || !is_prime_u32(static_cast<std::uint32_t>(p)))
      fail(ErrorCode::Schema, "field modulus is not a prime: " + name);
    return prime(static_cast<std::uint32_t>(p));
  }
  fail(ErrorCode::Schema, "bad field name: " + name);
}

Zp Zp::inverse() const {
  require(v_ != 0, ErrorCode::Singular, "division by zero in prime field");
  // Extended Euclid on (v, p).
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Zp(x0, p_);
}

Rational scalar_traits<Rational>::parse(const std::string& text, const FieldTag& field) {
  require(field.is_rational(), ErrorCode::Schema, "rational scalar for a non-rational field");
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) fail(ErrorCode::Schema, "bad rational scalar: \"" + text + "\"");
  if (r.get_den() == 0) fail(ErrorCode::Schema, "zero denominator: \"" + text + "\"");
  r.canonicalize();
  return r;
}

Zp scalar_traits<Zp>::parse(const std::string& text, const FieldTag& field) {
  require(!field.is_rational(), ErrorCode::Schema, "residue for a rational field");
  Rational r = scalar_traits<Rational>::parse(text, FieldTag::rationals());
  mpz_class num = r.get_num() % field.p;
  mpz_class den = r.get_den() % field.p;
  if (den == 0) fail(ErrorCode::Schema, "denominator vanishes mod p: \"" + text + "\"");
  return Zp(num.get_si(), field.p) / Zp(den.get_si(), field.p);
}

}  // namespace lagorb
