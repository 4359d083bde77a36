#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "reltype/polynomial.hpp"

namespace reltype {

struct GBConfig {
  unsigned degree_bound = 60;   // cap on intermediate total degree
  double timeout_seconds = 0;   // 0 = no timeout
  // When > 0, S-pairs whose lcm exceeds this weighted degree are
  // discarded instead of processed. For input homogeneous under the
  // ring's weights the result is exact up to that degree (a truncated
  // basis), and meaningless above it.
  long weighted_truncate = 0;
};

struct GBStats {
  std::uint64_t s_pairs = 0;
  std::uint64_t reductions = 0;
  long max_degree = 0;
};

// Thrown when the degree bound or the wall-clock timeout is exceeded.
// Always reported, never a silent wrong answer.
class ResourceAbort : public std::runtime_error {
 public:
  ResourceAbort(std::string reason, GBStats stats)
      : std::runtime_error(std::move(reason)), stats(stats) {}
  GBStats stats;
};

struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;  // reduced, monic, ascending leads
  GBStats stats;
};

// Buchberger with the normal selection strategy, product and chain
// criteria, deterministic tie-breaking. Output is the unique reduced GB.
GroebnerBasis groebner_basis(const RingPtr& ring,
                             const std::vector<Polynomial>& gens,
                             const GBConfig& config = {});

// Remainder of multivariate division by `basis`; no term of the result
// is divisible by any leading term.
Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis);

// Finite generator list with a cached reduced GB. The zero ideal is the
// generator list {0}.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const GroebnerBasis& gb(const GBConfig& config = {}) const;
  bool has_cached_gb() const { return static_cast<bool>(gb_); }

  bool contains(const Polynomial& f, const GBConfig& config = {}) const;
  bool is_unit(const GBConfig& config = {}) const;  // 1 in I
  bool is_zero_ideal(const GBConfig& config = {}) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::shared_ptr<const GroebnerBasis> gb_;
};

bool ideal_membership(const Polynomial& f, const Ideal& I,
                      const GBConfig& config = {});
bool ideal_equal(const Ideal& I, const Ideal& J, const GBConfig& config = {});

}  // namespace reltype
