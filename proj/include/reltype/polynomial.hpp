#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reltype/monomial.hpp"

namespace reltype {

struct Term {
  Coeff c;
  Monomial m;
};

// Minus-infinity marker for the degree of the zero polynomial.
inline constexpr long kDegreeMinusInfinity = -1000000000L;

// Sparse multivariate polynomial: nonzero terms, strictly descending
// in the ambient monomial order.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial constant(RingPtr ring, long v);
  static Polynomial variable(RingPtr ring, std::size_t idx);
  static Polynomial term(RingPtr ring, const Coeff& c, Monomial m);
  // Normalizes: merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  const Term& leading_term() const;
  const Coeff& leading_coeff() const { return leading_term().c; }
  const Monomial& leading_monomial() const { return leading_term().m; }

  long total_degree() const;  // kDegreeMinusInfinity for zero
  long degree_in(std::size_t var) const;
  long weighted_degree(const std::vector<long>& weights) const;
  bool is_homogeneous(const std::vector<long>& weights) const;
  // Split by weighted degree, degrees strictly increasing; pieces sum
  // back to the input.
  std::vector<std::pair<long, Polynomial>> homogeneous_components(
      const std::vector<long>& weights) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial pow(unsigned long e) const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial mul_term(const Coeff& c, const Monomial& m) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Ring homomorphism: replaces variable i by images[i]; all images in
  // one target ring. Coefficients are converted into the target field.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  // Re-homes the polynomial in `target` by variable name lookup; every
  // variable occurring here must exist in target.
  Polynomial map_to(const RingPtr& target) const;

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Quotient when g divides f exactly; nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& f,
                                       const Polynomial& g);

// Monic multivariate gcd via primitive remainder sequences, recursing
// on the variable count. gcd(0,0) = 0.
Polynomial gcd_multivariate(const Polynomial& a, const Polynomial& b);

Coeff convert_coeff(const Coeff& c, const FieldDesc& target);

}  // namespace reltype
