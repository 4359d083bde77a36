#pragma once

#include <array>
#include <optional>

#include "reltype/rees.hpp"

namespace reltype {

// Rectangular matrix of polynomials in a shared ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols,
             std::vector<Polynomial> entries);  // row-major

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& at(std::size_t r, std::size_t c) const;
  Polynomial& at(std::size_t r, std::size_t c);

 private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> entries_;
};

// All r x r minors, Laplace expansion, row-set-then-column-set
// lexicographic order.
std::vector<Polynomial> minors(const PolyMatrix& M, std::size_t r);

// Rewrites each generator with m >= 4 terms as m-2 trinomials through
// m-3 new variables (grouping the trailing two terms first). Refined
// mode only emits monomials, binomials with a linear term, and linear
// trinomials.
struct TrinomialReduction {
  RingPtr ext_ring;                  // R[y1,...,yr]
  std::vector<Polynomial> gens;      // each with <= 3 terms
  // y_i -> polynomial in R and earlier y's, in introduction order.
  std::vector<std::pair<std::string, Polynomial>> substitution;
  std::size_t new_vars = 0;

  // Back-substitutes the y's away, yielding polynomials in `target`.
  std::vector<Polynomial> back_substituted(const RingPtr& target) const;
};

TrinomialReduction trinomialize(const IdealPresentation& P,
                                bool refined = false);

// B with [t]·eta = [x_vars]·B; entries linear in the t-variables. Each
// monomial of each entry of eta is assigned to the lowest-index
// dividing variable of x_vars.
PolyMatrix jacobian_dual(const PolyMatrix& eta,
                         const std::vector<std::size_t>& x_vars);

struct ExpectedEquationsReport {
  bool holds = false;
  std::optional<Polynomial> witness;  // L generator missing from E
  PolyMatrix jacobian;                // B(eta)
  std::vector<Polynomial> top_minors;
  EquationsProfile profile;
};

// Tests L = (L<1>, I_|x|(B(eta))); the inclusion of the minor ideal in
// L is asserted unconditionally.
ExpectedEquationsReport expected_equations_check(const IdealPresentation& P,
                                                 const PolyMatrix& eta,
                                                 const GBConfig& config = {});

// I = g · I_{s-1}(eta) for the s x (s-1) presentation matrix eta.
bool hilbert_burch_check(const IdealPresentation& P, const Polynomial& g,
                         const PolyMatrix& eta, const GBConfig& config = {});

struct PrincipalStrip {
  Polynomial g;  // monic gcd of the generators
  Ideal factor;  // (I : g)
  bool factorization_exact = false;  // I == g * factor
};

PrincipalStrip strip_principal_part(const Ideal& I,
                                    const GBConfig& config = {});

struct EquidimensionalReport {
  Ideal full;                 // intersection of all components
  std::optional<Ideal> reduced;  // heights 2..n-1 only; nullopt if none
  EquationsProfile rt_full;
  std::optional<EquationsProfile> rt_reduced;
  bool agrees = false;  // rt(full)=1 or rt(full)=rt(reduced)
};

EquidimensionalReport equidimensional_reduce(
    const std::vector<std::pair<Ideal, unsigned>>& components,
    const GBConfig& config = {});

// Kernel of x,y,z -> g1(t), g2(t), g3(t).
Ideal parametrized_curve_ideal(const std::vector<Polynomial>& images,
                               const std::vector<std::string>& target_names =
                                   {"x", "y", "z"},
                               const GBConfig& config = {});

struct MonomialCurve {
  Ideal ideal;
  bool gcd_is_one = true;  // gcd(n1,n2,n3) != 1 is worth a warning
};

MonomialCurve monomial_curve_ideal(long n1, long n2, long n3,
                                   const FieldDesc& field = {},
                                   const GBConfig& config = {});

// 2x2-minor ideal of the exponent matrix with rows x^a1,y^a2,z^a3 and
// y^b2,z^b3,x^b1; linear type, prime iff gcd(m(J)) = 1.
struct HNIdeal {
  std::array<long, 3> a, b, c, m;
  RingPtr ring;  // k[x,y,z]
  std::vector<Polynomial> gens;
  bool gcd_m_is_one = false;
};

HNIdeal herzog_northcott(const std::array<long, 3>& a,
                         const std::array<long, 3>& b,
                         const FieldDesc& field = {});

// (x1x2, ..., x_{n-1}x_n, x_n x_1), n even, n >= 4.
Ideal cycle_edge_ideal(unsigned n, const FieldDesc& field = {});

}  // namespace reltype
