#include "reltype/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace reltype {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  entries_.assign(rows * cols, Polynomial::zero(ring_));
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols,
                       std::vector<Polynomial> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("matrix entry count mismatch");
  for (const auto& e : entries_)
    if (!same_ring(e.ring(), ring_))
      throw std::invalid_argument("matrix entry in wrong ring");
}

const Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return entries_[r * cols_ + c];
}

Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return entries_[r * cols_ + c];
}

namespace {

Polynomial det_laplace(const PolyMatrix& M, const std::vector<std::size_t>& rs,
                       const std::vector<std::size_t>& cs) {
  if (rs.size() == 1) return M.at(rs[0], cs[0]);
  Polynomial d = Polynomial::zero(M.ring());
  std::vector<std::size_t> sub_rs(rs.begin() + 1, rs.end());
  for (std::size_t j = 0; j < cs.size(); ++j) {
    std::vector<std::size_t> sub_cs;
    for (std::size_t k = 0; k < cs.size(); ++k)
      if (k != j) sub_cs.push_back(cs[k]);
    Polynomial cof = M.at(rs[0], cs[j]) * det_laplace(M, sub_rs, sub_cs);
    d = (j % 2 == 0) ? d + cof : d - cof;
  }
  return d;
}

void subsets(std::size_t n, std::size_t r,
             const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = r;
    while (i-- > 0) {
      if (idx[i] + (r - i) < n + 0) {
        ++idx[i];
        for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& M, std::size_t r) {
  if (r == 0 || r > M.rows() || r > M.cols())
    throw PreconditionError("minor size out of range");
  std::vector<Polynomial> out;
  subsets(M.rows(), r, [&](const std::vector<std::size_t>& rs) {
    subsets(M.cols(), r, [&](const std::vector<std::size_t>& cs) {
      out.push_back(det_laplace(M, rs, cs));
    });
  });
  return out;
}

namespace {

bool is_linear_term(const Term& t) { return t.m.total_degree() == 1; }

bool refined_shape_ok(const Polynomial& f) {
  const auto& ts = f.terms();
  if (ts.size() <= 1) return true;  // monomial (or zero)
  if (ts.size() == 2) return is_linear_term(ts[0]) || is_linear_term(ts[1]);
  if (ts.size() == 3)
    return is_linear_term(ts[0]) && is_linear_term(ts[1]) &&
           is_linear_term(ts[2]);
  return false;
}

}  // namespace

TrinomialReduction trinomialize(const IdealPresentation& P, bool refined) {
  if (!P.relations.empty())
    throw PreconditionError("trinomialize: quotient presentation rejected");
  const RingContext& base = *P.ring;

  // Count the new variables first so the extended ring can be built in
  // one go.
  std::size_t r = 0;
  for (const auto& f : P.gens) {
    std::size_t m = f.term_count();
    if (!refined) {
      r += m > 3 ? m - 3 : 0;
    } else if (!refined_shape_ok(f)) {
      for (const auto& t : f.terms())
        if (!is_linear_term(t)) ++r;
      r += m > 3 ? m - 3 : 0;
    }
  }

  std::vector<std::string> vars = base.var_names();
  std::vector<std::string> ynames;
  {
    // y1, y2, ... skipping collisions with existing names.
    std::size_t next = 1;
    while (ynames.size() < r) {
      std::string nm = "y" + std::to_string(next++);
      if (base.var_index(nm) < 0) ynames.push_back(nm);
    }
  }
  vars.insert(vars.end(), ynames.begin(), ynames.end());
  std::vector<long> weights = base.weights();
  weights.insert(weights.end(), r, 0);
  auto ext = make_ring(base.field(), vars, {}, weights);

  TrinomialReduction red;
  red.ext_ring = ext;
  red.new_vars = r;
  std::size_t used = 0;

  auto term_in_ext = [&](const Term& t) {
    Monomial m(ext->arity());
    for (std::size_t i = 0; i < base.arity(); ++i) m.set(i, t.m[i]);
    return Polynomial::term(ext, t.c, std::move(m));
  };
  auto next_y = [&]() {
    Polynomial y = Polynomial::variable(ext, base.arity() + used);
    ++used;
    return std::make_pair(ynames[used - 1], y);
  };

  for (const auto& f : P.gens) {
    const auto& ts = f.terms();
    std::size_t m = ts.size();
    if (!refined) {
      if (m <= 3) {
        red.gens.push_back(f.map_to(ext));
        continue;
      }
      // g_1..g_m are the terms in descending ambient order; group the
      // last two first, then fold one term at a time.
      auto [nm, y] = next_y();
      red.gens.push_back(y - (term_in_ext(ts[m - 2]) + term_in_ext(ts[m - 1])));
      red.substitution.emplace_back(
          nm, term_in_ext(ts[m - 2]) + term_in_ext(ts[m - 1]));
      Polynomial prev = y;
      for (std::size_t i = 2; i + 1 <= m - 2; ++i) {
        auto [nm2, y2] = next_y();
        Polynomial rhs = term_in_ext(ts[m - 1 - i]) + prev;
        red.gens.push_back(y2 - rhs);
        red.substitution.emplace_back(nm2, rhs);
        prev = y2;
      }
      red.gens.push_back(term_in_ext(ts[0]) + term_in_ext(ts[1]) + prev);
    } else {
      if (refined_shape_ok(f)) {
        red.gens.push_back(f.map_to(ext));
        continue;
      }
      // Replace every non-linear term by a fresh variable, then chain
      // the resulting linear form into linear trinomials.
      std::vector<Polynomial> atoms;
      for (const auto& t : ts) {
        if (is_linear_term(t)) {
          atoms.push_back(term_in_ext(t));
        } else {
          auto [nm, y] = next_y();
          red.gens.push_back(y - term_in_ext(t));
          red.substitution.emplace_back(nm, term_in_ext(t));
          atoms.push_back(y);
        }
      }
      while (atoms.size() > 3) {
        auto [nm, y] = next_y();
        Polynomial rhs = atoms[atoms.size() - 2] + atoms[atoms.size() - 1];
        red.gens.push_back(y - rhs);
        red.substitution.emplace_back(nm, rhs);
        atoms.pop_back();
        atoms.pop_back();
        atoms.push_back(y);
      }
      Polynomial acc = Polynomial::zero(ext);
      for (const auto& a : atoms) acc = acc + a;
      red.gens.push_back(acc);
    }
  }
  return red;
}

std::vector<Polynomial> TrinomialReduction::back_substituted(
    const RingPtr& target) const {
  // Expand each y (in introduction order) down to the base variables.
  std::vector<Polynomial> images;
  const std::size_t base_arity = ext_ring->arity() - new_vars;
  for (std::size_t i = 0; i < base_arity; ++i)
    images.push_back(
        Polynomial::variable(ext_ring, i).map_to(target));
  for (std::size_t k = 0; k < new_vars; ++k) {
    std::vector<Polynomial> partial = images;
    // Later y's may not occur in this substitution entry; placeholders
    // keep substitute() total.
    for (std::size_t j = k; j < new_vars; ++j)
      partial.push_back(Polynomial::zero(target));
    images.push_back(substitution[k].second.substitute(partial));
  }
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(g.substitute(images));
  return out;
}

PolyMatrix jacobian_dual(const PolyMatrix& eta,
                         const std::vector<std::size_t>& x_vars) {
  const RingContext& base = *eta.ring();
  const std::size_t s = eta.rows();
  auto s_ring = rees_extended_ring(base, s);
  PolyMatrix B(s_ring, x_vars.size(), eta.cols());
  for (std::size_t j = 0; j < eta.cols(); ++j) {
    for (std::size_t i = 0; i < s; ++i) {
      Polynomial ti = Polynomial::variable(s_ring, base.arity() + i);
      for (const auto& t : eta.at(i, j).terms()) {
        std::size_t assigned = x_vars.size();
        for (std::size_t k = 0; k < x_vars.size(); ++k) {
          if (t.m[x_vars[k]] > 0) {
            assigned = k;
            break;
          }
        }
        if (assigned == x_vars.size())
          throw PreconditionError(
              "jacobian_dual: entry has a term outside (x_vars)");
        Monomial m(s_ring->arity());
        for (std::size_t v = 0; v < base.arity(); ++v) m.set(v, t.m[v]);
        m.set(x_vars[assigned], m[x_vars[assigned]] - 1);
        B.at(assigned, j) =
            B.at(assigned, j) + ti.mul_term(t.c, m);
      }
    }
  }
  // The contract is the exact identity [t]·eta = [x]·B.
  for (std::size_t j = 0; j < eta.cols(); ++j) {
    Polynomial lhs = Polynomial::zero(s_ring);
    for (std::size_t i = 0; i < s; ++i)
      lhs = lhs + Polynomial::variable(s_ring, base.arity() + i) *
                      eta.at(i, j).map_to(s_ring);
    Polynomial rhs = Polynomial::zero(s_ring);
    for (std::size_t k = 0; k < x_vars.size(); ++k)
      rhs = rhs + Polynomial::variable(s_ring, x_vars[k]) * B.at(k, j);
    if (lhs != rhs) throw std::logic_error("jacobian dual identity failed");
  }
  return B;
}

ExpectedEquationsReport expected_equations_check(const IdealPresentation& P,
                                                 const PolyMatrix& eta,
                                                 const GBConfig& config) {
  const RingContext& base = *P.ring;
  if (eta.rows() != P.gens.size())
    throw PreconditionError("eta must have one row per generator");
  // Every column of eta must be a syzygy of the generators (mod K).
  std::vector<Polynomial> kgb_elems;
  if (!P.relations.empty())
    kgb_elems = groebner_basis(P.ring, P.relations, config).elements;
  for (std::size_t j = 0; j < eta.cols(); ++j) {
    Polynomial acc = Polynomial::zero(P.ring);
    for (std::size_t i = 0; i < eta.rows(); ++i)
      acc = acc + eta.at(i, j) * P.gens[i];
    if (!normal_form(acc, kgb_elems).is_zero())
      throw PreconditionError("eta is not a syzygy matrix of the generators");
  }

  ReesEquations E = rees_ideal(P, config);
  std::vector<std::size_t> x_vars(base.arity());
  std::iota(x_vars.begin(), x_vars.end(), 0);
  ExpectedEquationsReport rep;
  rep.jacobian = jacobian_dual(eta, x_vars);
  if (base.arity() <= std::min(rep.jacobian.rows(), rep.jacobian.cols()))
    rep.top_minors = minors(rep.jacobian, base.arity());
  rep.profile = relation_type(E, config);

  std::vector<Polynomial> l_gens = E.generators;
  l_gens.insert(l_gens.end(), E.relations_in_s.begin(),
                E.relations_in_s.end());
  Ideal L(E.s_ring, l_gens);

  std::vector<Polynomial> e_gens = E.relations_in_s;
  for (const auto& f : E.generators)
    if (E.t_degree(f) == 1) e_gens.push_back(f);
  for (const auto& f : rep.top_minors) e_gens.push_back(f);
  Ideal Eid(E.s_ring, e_gens);

  for (const auto& f : rep.top_minors)
    if (!L.contains(f, config))
      throw std::logic_error("minor ideal not contained in L");

  rep.holds = true;
  for (const auto& f : E.generators) {
    if (!Eid.contains(f, config)) {
      rep.holds = false;
      rep.witness = f;
      break;
    }
  }
  return rep;
}

bool hilbert_burch_check(const IdealPresentation& P, const Polynomial& g,
                         const PolyMatrix& eta, const GBConfig& config) {
  if (g.is_zero()) throw PreconditionError("hilbert_burch: g must be nonzero");
  const std::size_t s = P.gens.size();
  if (eta.rows() != s || eta.cols() + 1 != s)
    throw PreconditionError("hilbert_burch: eta must be s x (s-1)");
  auto ms = minors(eta, s - 1);
  std::vector<Polynomial> scaled;
  for (const auto& m : ms) scaled.push_back(g * m);
  return ideal_equal(Ideal(P.ring, P.gens), Ideal(P.ring, scaled), config);
}

PrincipalStrip strip_principal_part(const Ideal& I, const GBConfig& config) {
  Polynomial g = Polynomial::zero(I.ring());
  for (const auto& f : I.gens()) g = gcd_multivariate(g, f);
  PrincipalStrip out;
  if (g.is_zero() || g.is_constant()) {
    out.g = Polynomial::constant(I.ring(), 1);
    out.factor = I;
    out.factorization_exact = true;
    return out;
  }
  out.g = g;
  out.factor = colon(I, g, config);
  out.factorization_exact =
      ideal_equal(I, product_ideal(g, out.factor), config);
  return out;
}

EquidimensionalReport equidimensional_reduce(
    const std::vector<std::pair<Ideal, unsigned>>& components,
    const GBConfig& config) {
  if (components.empty())
    throw PreconditionError("equidimensional_reduce: no components");
  const RingPtr& ring = components[0].first.ring();
  const auto n = static_cast<unsigned>(ring->arity());
  for (const auto& [J, h] : components) {
    if (J.is_unit(config))
      throw PreconditionError("component is the improper ideal");
    unsigned actual = height_unmixed(J, config);
    if (actual != h)
      throw PreconditionError("declared height " + std::to_string(h) +
                              " but computed " + std::to_string(actual));
  }
  EquidimensionalReport rep;
  rep.full = components[0].first;
  for (std::size_t i = 1; i < components.size(); ++i)
    rep.full = intersect(rep.full, components[i].first, config);
  std::vector<Ideal> mid;
  for (const auto& [J, h] : components)
    if (h >= 2 && h + 1 <= n) mid.push_back(J);
  rep.rt_full =
      relation_type(IdealPresentation(ring, rep.full.gens()), config);
  if (!mid.empty()) {
    Ideal red = mid[0];
    for (std::size_t i = 1; i < mid.size(); ++i)
      red = intersect(red, mid[i], config);
    rep.rt_reduced =
        relation_type(IdealPresentation(ring, red.gens()), config);
    rep.reduced = std::move(red);
    rep.agrees = rep.rt_full.relation_type == 1 ||
                 rep.rt_full.relation_type == rep.rt_reduced->relation_type;
  } else {
    rep.agrees = rep.rt_full.relation_type == 1;
  }
  return rep;
}

Ideal parametrized_curve_ideal(const std::vector<Polynomial>& images,
                               const std::vector<std::string>& target_names,
                               const GBConfig& config) {
  for (const auto& g : images)
    if (g.ring()->arity() != 1)
      throw PreconditionError("curve images must be univariate");
  return kernel_of_ring_map(images, target_names, config);
}

MonomialCurve monomial_curve_ideal(long n1, long n2, long n3,
                                   const FieldDesc& field,
                                   const GBConfig& config) {
  if (n1 <= 0 || n2 <= 0 || n3 <= 0)
    throw PreconditionError("monomial curve exponents must be positive");
  auto kt = make_ring(field, {"t"});
  Polynomial t = Polynomial::variable(kt, 0);
  std::vector<Polynomial> images{t.pow(n1), t.pow(n2), t.pow(n3)};
  MonomialCurve out;
  out.gcd_is_one = std::gcd(std::gcd(n1, n2), n3) == 1;
  out.ideal = parametrized_curve_ideal(images, {"x", "y", "z"}, config);
  return out;
}

HNIdeal herzog_northcott(const std::array<long, 3>& a,
                         const std::array<long, 3>& b,
                         const FieldDesc& field) {
  for (long v : a)
    if (v <= 0) throw PreconditionError("HN exponents must be positive");
  for (long v : b)
    if (v <= 0) throw PreconditionError("HN exponents must be positive");
  HNIdeal J;
  J.a = a;
  J.b = b;
  for (int i = 0; i < 3; ++i) J.c[i] = a[i] + b[i];
  J.m = {J.c[1] * J.c[2] - a[1] * b[2], J.c[0] * J.c[2] - a[2] * b[0],
         J.c[0] * J.c[1] - a[0] * b[1]};
  J.gcd_m_is_one = std::gcd(std::gcd(J.m[0], J.m[1]), J.m[2]) == 1;
  J.ring = make_ring(field, {"x", "y", "z"});
  Polynomial x = Polynomial::variable(J.ring, 0);
  Polynomial y = Polynomial::variable(J.ring, 1);
  Polynomial z = Polynomial::variable(J.ring, 2);
  J.gens = {x.pow(J.c[0]) - y.pow(b[1]) * z.pow(a[2]),
            y.pow(J.c[1]) - x.pow(a[0]) * z.pow(b[2]),
            z.pow(J.c[2]) - x.pow(b[0]) * y.pow(a[1])};
  return J;
}

Ideal cycle_edge_ideal(unsigned n, const FieldDesc& field) {
  if (n < 4 || n % 2 != 0)
    throw PreconditionError("cycle edge ideal needs even n >= 4");
  std::vector<std::string> vars;
  for (unsigned i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  auto ring = make_ring(field, vars);
  std::vector<Polynomial> gens;
  for (unsigned i = 0; i < n; ++i) {
    Polynomial e = Polynomial::variable(ring, i) *
                   Polynomial::variable(ring, (i + 1) % n);
    gens.push_back(e);
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace reltype
