#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "reltype/field.hpp"

namespace reltype {

// Monomial orders. Block compares a prefix group of variables first
// (degrevlex inside each group), which makes it an elimination order
// for that prefix.
struct OrderSpec {
  enum class Kind { Lex, DegRevLex, Block, WeightDegRevLex };
  Kind kind = Kind::DegRevLex;
  std::size_t block = 0;  // length of the leading block (Block only)

  bool operator==(const OrderSpec&) const = default;
  std::string to_string() const;
};

// Fixes the ambient ring: coefficient field, named variables, monomial
// order and grading weights. Shared immutably by all values living in it.
class RingContext {
 public:
  RingContext(FieldDesc field, std::vector<std::string> vars, OrderSpec order,
              std::vector<long> weights);

  const FieldDesc& field() const { return field_; }
  std::size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_[i]; }
  const OrderSpec& order() const { return order_; }
  const std::vector<long>& weights() const { return weights_; }

  // -1 when absent.
  int var_index(const std::string& name) const;

  bool same_structure(const RingContext& o) const;
  std::string to_string() const;

 private:
  FieldDesc field_;
  std::vector<std::string> vars_;
  OrderSpec order_;
  std::vector<long> weights_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(FieldDesc field, std::vector<std::string> vars,
                  OrderSpec order = {}, std::vector<long> weights = {});

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same_structure(*b));
}

}  // namespace reltype
