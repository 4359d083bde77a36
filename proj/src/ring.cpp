#include "reltype/ring.hpp"

#include <set>

namespace reltype {

std::string OrderSpec::to_string() const {
  switch (kind) {
    case Kind::Lex:
      return "lex";
    case Kind::DegRevLex:
      return "degrevlex";
    case Kind::Block:
      return "block(" + std::to_string(block) + ")";
    case Kind::WeightDegRevLex:
      return "wdegrevlex";
  }
  return "?";
}

RingContext::RingContext(FieldDesc field, std::vector<std::string> vars,
                         OrderSpec order, std::vector<long> weights)
    : field_(field),
      vars_(std::move(vars)),
      order_(order),
      weights_(std::move(weights)) {
  if (vars_.empty()) throw std::invalid_argument("ring needs variables");
  if (vars_.size() > 32)
    throw std::invalid_argument("at most 32 variables supported");
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size())
    throw std::invalid_argument("duplicate variable name");
  if (!field_.is_rational() && !is_prime_u64(field_.characteristic))
    throw std::invalid_argument("GF(p): p must be prime");
  if (weights_.empty()) weights_.assign(vars_.size(), 0);
  if (weights_.size() != vars_.size())
    throw std::invalid_argument("weight vector length mismatch");
  if (order_.kind == OrderSpec::Kind::Block &&
      (order_.block == 0 || order_.block >= vars_.size()))
    throw std::invalid_argument("block order: bad block size");
}

int RingContext::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool RingContext::same_structure(const RingContext& o) const {
  return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_ &&
         weights_ == o.weights_;
}

std::string RingContext::to_string() const {
  std::string s = field_.to_string() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ",";
    s += vars_[i];
  }
  s += "]";
  return s;
}

RingPtr make_ring(FieldDesc field, std::vector<std::string> vars,
                  OrderSpec order, std::vector<long> weights) {
  return std::make_shared<RingContext>(field, std::move(vars), order,
                                       std::move(weights));
}

}  // namespace reltype
