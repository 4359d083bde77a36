#include "reltype/ideal_ops.hpp"

#include <algorithm>

namespace reltype {

std::string fresh_var_name(const RingContext& ring, const std::string& base) {
  if (ring.var_index(base) < 0) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (ring.var_index(cand) < 0) return cand;
  }
}

namespace {

// Ring with `front` variables prepended and a block order eliminating
// them; weights on the front block as given.
RingPtr block_ring(const RingContext& ring,
                   const std::vector<std::string>& front,
                   const std::vector<long>& front_weights) {
  std::vector<std::string> vars = front;
  vars.insert(vars.end(), ring.var_names().begin(), ring.var_names().end());
  std::vector<long> weights = front_weights;
  weights.insert(weights.end(), ring.weights().begin(), ring.weights().end());
  return make_ring(ring.field(), std::move(vars),
                   {OrderSpec::Kind::Block, front.size()}, std::move(weights));
}

bool uses_front(const Polynomial& f, std::size_t block) {
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < block; ++i)
      if (t.m[i]) return true;
  return false;
}

// GB elements free of the first `block` variables; still living in
// `ring` (a block-order ring).
std::vector<Polynomial> eliminate_front(const RingPtr& ring,
                                        const std::vector<Polynomial>& gens,
                                        std::size_t block,
                                        const GBConfig& config) {
  auto gb = groebner_basis(ring, gens, config);
  std::vector<Polynomial> out;
  for (const auto& f : gb.elements)
    if (!uses_front(f, block)) out.push_back(f);
  return out;
}

}  // namespace

Ideal elimination_ideal(const Ideal& I, const std::vector<std::size_t>& drop,
                        const GBConfig& config) {
  const RingContext& ring = *I.ring();
  if (drop.empty()) return I;
  std::vector<bool> dropped(ring.arity(), false);
  for (auto i : drop) {
    if (i >= ring.arity()) throw std::out_of_range("variable index");
    dropped[i] = true;
  }
  std::vector<std::string> front, back;
  std::vector<long> wfront, wback;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    (dropped[i] ? front : back).push_back(ring.var_name(i));
    (dropped[i] ? wfront : wback).push_back(ring.weights()[i]);
  }
  if (back.empty()) throw PreconditionError("cannot eliminate every variable");
  auto work =
      make_ring(ring.field(), [&] {
        auto v = front;
        v.insert(v.end(), back.begin(), back.end());
        return v;
      }(), {OrderSpec::Kind::Block, front.size()}, [&] {
        auto w = wfront;
        w.insert(w.end(), wback.begin(), wback.end());
        return w;
      }());
  std::vector<Polynomial> mapped;
  for (const auto& f : I.gens()) mapped.push_back(f.map_to(work));
  auto kept = eliminate_front(work, mapped, front.size(), config);
  auto result_ring = make_ring(ring.field(), back, {}, wback);
  std::vector<Polynomial> out;
  for (const auto& f : kept) out.push_back(f.map_to(result_ring));
  return Ideal(result_ring, std::move(out));
}

Ideal intersect(const Ideal& I, const Ideal& J, const GBConfig& config) {
  if (!same_ring(I.ring(), J.ring()))
    throw std::invalid_argument("intersect: ring mismatch");
  const RingContext& ring = *I.ring();
  std::string wname = fresh_var_name(ring, "w");
  auto work = block_ring(ring, {wname}, {0});
  Polynomial w = Polynomial::variable(work, 0);
  Polynomial one = Polynomial::constant(work, 1);
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens()) gens.push_back(w * f.map_to(work));
  for (const auto& f : J.gens()) gens.push_back((one - w) * f.map_to(work));
  auto kept = eliminate_front(work, gens, 1, config);
  std::vector<Polynomial> out;
  for (const auto& f : kept) out.push_back(f.map_to(I.ring()));
  return Ideal(I.ring(), std::move(out));
}

Ideal colon(const Ideal& I, const Polynomial& f, const GBConfig& config) {
  if (f.is_zero()) throw PreconditionError("colon by zero");
  Ideal cap = intersect(I, Ideal(I.ring(), {f}), config);
  std::vector<Polynomial> out;
  for (const auto& g : cap.gens()) {
    auto q = divide_exact(g, f);
    if (!q) throw std::logic_error("colon: inexact division");
    out.push_back(std::move(*q));
  }
  return Ideal(I.ring(), std::move(out));
}

Ideal colon_ideal(const Ideal& I, const Ideal& J, const GBConfig& config) {
  bool any = false;
  Ideal acc;
  for (const auto& g : J.gens()) {
    if (g.is_zero()) continue;
    Ideal c = colon(I, g, config);
    acc = any ? intersect(acc, c, config) : c;
    any = true;
  }
  if (!any) throw PreconditionError("colon by the zero ideal");
  return acc;
}

Ideal quotient_colon(const RingPtr& ring, const std::vector<Polynomial>& K,
                     const std::vector<Polynomial>& a, const Polynomial& b,
                     const GBConfig& config) {
  std::vector<Polynomial> gens = a;
  gens.insert(gens.end(), K.begin(), K.end());
  return colon(Ideal(ring, std::move(gens)), b, config);
}

bool radical_membership(const Polynomial& f, const Ideal& I,
                        const GBConfig& config) {
  if (f.is_zero()) return true;
  const RingContext& ring = *I.ring();
  std::string wname = fresh_var_name(ring, "w");
  auto work = block_ring(ring, {wname}, {0});
  Polynomial w = Polynomial::variable(work, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.map_to(work));
  gens.push_back(Polynomial::constant(work, 1) - w * f.map_to(work));
  return Ideal(work, std::move(gens)).is_unit(config);
}

unsigned krull_dimension(const Ideal& I, const GBConfig& config) {
  const auto& gb = I.gb(config).elements;
  const std::size_t n = I.ring()->arity();
  if (!gb.empty() && gb.front().is_constant())
    throw PreconditionError("dimension of the improper ideal");
  if (n > 24) throw PreconditionError("dimension: too many variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) {
    std::uint32_t mask = 0;
    const Monomial& m = g.leading_monomial();
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) mask |= 1u << i;
    supports.push_back(mask);
  }
  unsigned best = 0;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    bool independent = true;
    for (auto s : supports) {
      if ((s & ~u) == 0) {
        independent = false;
        break;
      }
    }
    if (independent)
      best = std::max(best, static_cast<unsigned>(__builtin_popcount(u)));
  }
  return best;
}

unsigned height_unmixed(const Ideal& I, const GBConfig& config) {
  return static_cast<unsigned>(I.ring()->arity()) - krull_dimension(I, config);
}

Ideal kernel_of_ring_map(const std::vector<Polynomial>& images,
                         const std::vector<std::string>& target_names,
                         const GBConfig& config) {
  if (images.empty()) throw std::invalid_argument("no images");
  if (images.size() != target_names.size())
    throw std::invalid_argument("one target variable per image required");
  RingPtr src = images[0].ring();
  for (const auto& g : images)
    if (!same_ring(src, g.ring()))
      throw std::invalid_argument("images in different rings");
  std::vector<std::string> vars = src->var_names();
  for (const auto& nm : target_names) {
    if (std::find(vars.begin(), vars.end(), nm) != vars.end())
      throw std::invalid_argument("target variable collides with source: " +
                                  nm);
    vars.push_back(nm);
  }
  auto work = make_ring(src->field(), vars,
                        {OrderSpec::Kind::Block, src->arity()});
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < images.size(); ++i) {
    Polynomial xi = Polynomial::variable(
        work, src->arity() + i);
    gens.push_back(xi - images[i].map_to(work));
  }
  auto kept = eliminate_front(work, gens, src->arity(), config);
  auto result_ring = make_ring(src->field(), target_names);
  std::vector<Polynomial> out;
  for (const auto& f : kept) out.push_back(f.map_to(result_ring));
  return Ideal(result_ring, std::move(out));
}

Ideal product_ideal(const Polynomial& g, const Ideal& I) {
  std::vector<Polynomial> out;
  for (const auto& f : I.gens()) out.push_back(g * f);
  return Ideal(I.ring(), std::move(out));
}

}  // namespace reltype
