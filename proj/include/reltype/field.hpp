#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace reltype {

// Characteristic of the coefficient field: 0 means QQ, otherwise a
// word-size prime p and arithmetic is done in GF(p).
struct FieldDesc {
  std::uint64_t characteristic = 0;

  bool is_rational() const { return characteristic == 0; }
  bool operator==(const FieldDesc&) const = default;
  std::string to_string() const;
};

bool is_prime_u64(std::uint64_t n);

// A field element: exact rational (reduced, positive denominator --
// mpq_class keeps that canonical form) or a residue in [0, p).
class Coeff {
 public:
  Coeff() = default;

  static Coeff zero(const FieldDesc& f);
  static Coeff one(const FieldDesc& f);
  static Coeff from_int(long v, const FieldDesc& f);
  static Coeff rational(mpq_class q);
  static Coeff residue(std::uint64_t v, std::uint64_t p);

  // Parses "n" or "n/d".
  static Coeff parse(const std::string& text, const FieldDesc& f);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  const mpq_class& rat() const;
  std::uint64_t res() const { return v_; }

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff operator-() const;
  Coeff inv() const;

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same(const Coeff& o) const;

  // Disengaged means rational zero; residues never engage it, which
  // keeps GF(p) coefficient copies allocation-free.
  std::optional<mpq_class> q_;
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;  // 0 = rational
};

}  // namespace reltype
