#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "reltype/ring.hpp"

namespace reltype {

// Largest supported ring arity; inline exponent storage keeps monomial
// copies allocation-free on the Buchberger hot path.
inline constexpr std::size_t kMaxArity = 32;

// Exponent vector, length = arity of the ambient ring. Dense storage;
// arities here stay small.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : n_(static_cast<std::uint8_t>(arity)) {
    if (arity > kMaxArity) throw std::invalid_argument("too many variables");
    e_.fill(0);
  }

  std::size_t arity() const { return n_; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, std::uint32_t v) {
    if (v > UINT16_MAX) throw std::overflow_error("exponent overflow");
    e_[i] = static_cast<std::uint16_t>(v);
  }

  // Bit i set iff variable i occurs; a | b requires mask(a) subset of
  // mask(b), used as a cheap divisibility pre-filter.
  std::uint32_t divmask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i]) m |= 1u << i;
    return m;
  }

  long total_degree() const;
  long weighted_degree(const std::vector<long>& weights) const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // exact, caller checks
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] != o.e_[i]) return false;
    return true;
  }

 private:
  std::array<std::uint16_t, kMaxArity> e_{};
  std::uint8_t n_ = 0;
};

// Three-way comparison under an order; >0 when a > b.
int mono_cmp(const Monomial& a, const Monomial& b, const RingContext& ring);

}  // namespace reltype
