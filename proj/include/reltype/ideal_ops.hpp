#pragma once

#include "reltype/groebner.hpp"

namespace reltype {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// I ∩ k[remaining variables]; the variables in `drop` (indices into
// I's ring) disappear from the result ring.
Ideal elimination_ideal(const Ideal& I, const std::vector<std::size_t>& drop,
                        const GBConfig& config = {});

// Tag-variable intersection: eliminate w from w·I + (1-w)·J.
Ideal intersect(const Ideal& I, const Ideal& J, const GBConfig& config = {});

// (I : f) = (I ∩ (f)) / f, f ≠ 0.
Ideal colon(const Ideal& I, const Polynomial& f, const GBConfig& config = {});

// (I : J) = ∩_j (I : g_j) over nonzero generators of J.
Ideal colon_ideal(const Ideal& I, const Ideal& J, const GBConfig& config = {});

// ((a, K) : b) in R, the colon ideal of the quotient ring R/K lifted
// back to R.
Ideal quotient_colon(const RingPtr& ring, const std::vector<Polynomial>& K,
                     const std::vector<Polynomial>& a, const Polynomial& b,
                     const GBConfig& config = {});

// Rabinowitsch trick: f ∈ √I  ⟺  1 ∈ I + (1 - w·f).
bool radical_membership(const Polynomial& f, const Ideal& I,
                        const GBConfig& config = {});

// Dimension of V(I) via maximal independent sets modulo the leading
// term ideal. Requires 1 ∉ I.
unsigned krull_dimension(const Ideal& I, const GBConfig& config = {});

// n - dim(I); valid for the unmixed ideals this artifact targets.
unsigned height_unmixed(const Ideal& I, const GBConfig& config = {});

// Kernel of k[target] -> source ring, target_i ↦ images[i].
Ideal kernel_of_ring_map(const std::vector<Polynomial>& images,
                         const std::vector<std::string>& target_names,
                         const GBConfig& config = {});

// Picks a variable name absent from `ring` (base, base_1, base_2, ...).
std::string fresh_var_name(const RingContext& ring, const std::string& base);

// Product ideal (pairwise products of generators).
Ideal product_ideal(const Polynomial& g, const Ideal& I);

}  // namespace reltype
