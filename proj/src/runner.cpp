#include "reltype/runner.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "reltype/constructions.hpp"

namespace reltype {

namespace {

using json = nlohmann::ordered_json;

struct Env {
  RingPtr ring;
  std::map<std::string, std::vector<Polynomial>> ideals;
  std::map<std::string, PolyMatrix> matrices;
  GBConfig gb;
};

ScriptError usage(const std::string& msg, const ScriptCommand& cmd) {
  return ScriptError(cmd.name + ": " + msg, cmd.line, cmd.col);
}

const std::vector<Polynomial>& named_ideal(const Env& env,
                                           const ScriptArg& arg,
                                           const ScriptCommand& cmd) {
  if (arg.kind != ScriptArg::Kind::Name)
    throw usage("expected an ideal name", cmd);
  auto it = env.ideals.find(arg.name);
  if (it == env.ideals.end())
    throw ScriptError("unknown ideal '" + arg.name + "'", arg.line, arg.col);
  return it->second;
}

const PolyMatrix& named_matrix(const Env& env, const ScriptArg& arg,
                               const ScriptCommand& cmd) {
  if (arg.kind != ScriptArg::Kind::Name)
    throw usage("expected a matrix name", cmd);
  auto it = env.matrices.find(arg.name);
  if (it == env.matrices.end())
    throw ScriptError("unknown matrix '" + arg.name + "'", arg.line, arg.col);
  return it->second;
}

Polynomial poly_arg(const ScriptArg& arg, const ScriptCommand& cmd) {
  if (arg.kind == ScriptArg::Kind::Name)
    throw usage("expected a polynomial", cmd);
  return arg.poly;
}

long int_arg(const ScriptArg& arg, const ScriptCommand& cmd) {
  if (arg.kind != ScriptArg::Kind::Int)
    throw usage("expected an integer", cmd);
  return arg.integer;
}

json polys_json(const std::vector<Polynomial>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(f.to_string());
  return a;
}

json profile_json(const EquationsProfile& p) {
  json r;
  r["rt"] = p.relation_type;
  json fd = json::array();
  for (long d : p.fresh_degrees) fd.push_back(d);
  r["fresh_degrees"] = fd;
  r["linear_type"] = p.is_linear_type;
  r["syzygetic"] = p.is_syzygetic;
  return r;
}

json matrix_json(const PolyMatrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < M.cols(); ++j)
      row.push_back(M.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  json r;
  r["rows"] = M.rows();
  r["cols"] = M.cols();
  r["entries"] = std::move(rows);
  return r;
}

std::string poly_list(const std::vector<Polynomial>& fs) {
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += ", ";
    s += fs[i].to_string();
  }
  return s;
}

std::string profile_text(const EquationsProfile& p) {
  std::ostringstream os;
  os << "relation type: " << p.relation_type << "\n  fresh degrees: {";
  bool first = true;
  for (long d : p.fresh_degrees) {
    if (!first) os << ", ";
    os << d;
    first = false;
  }
  os << "}\n  linear type: " << (p.is_linear_type ? "yes" : "no")
     << "\n  syzygetic: " << (p.is_syzygetic ? "yes" : "no");
  return os.str();
}

void stats_from(json& rep, const GBStats& st) {
  rep["stats"]["s_pairs"] = st.s_pairs;
  rep["stats"]["reductions"] = st.reductions;
  rep["stats"]["max_degree"] = st.max_degree;
}

IdealPresentation presentation_for(const Env& env, const ScriptCommand& cmd,
                                   std::size_t first_arg = 0) {
  if (cmd.args.size() <= first_arg) throw usage("missing ideal argument", cmd);
  auto gens = named_ideal(env, cmd.args[first_arg], cmd);
  std::vector<Polynomial> rels;
  if (cmd.args.size() > first_arg + 1)
    rels = named_ideal(env, cmd.args[first_arg + 1], cmd);
  if (cmd.args.size() > first_arg + 2) throw usage("too many arguments", cmd);
  if (!rels.empty()) {
    Ideal K(env.ring, rels);
    if (K.is_unit(env.gb))
      throw PreconditionError("quotient by the improper ideal");
    bool all_in = true;
    for (const auto& g : gens)
      if (!K.contains(g, env.gb)) all_in = false;
    if (all_in) throw PreconditionError("all generators lie in the relations");
  }
  return IdealPresentation(env.ring, gens, rels);
}

// Executes one command; fills rep["result"], rep["stats"] and the text
// report.
void exec_command(Env& env, const ScriptCommand& cmd, json& rep,
                  std::ostringstream& text) {
  const auto& args = cmd.args;
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi)
      throw usage("wrong number of arguments", cmd);
  };

  if (cmd.name == "rt") {
    need(1, 2);
    auto P = presentation_for(env, cmd);
    ReesEquations E = rees_ideal(P, env.gb);
    auto prof = relation_type(E, env.gb);
    rep["result"] = profile_json(prof);
    stats_from(rep, E.stats);
    text << profile_text(prof);
  } else if (cmd.name == "rees") {
    need(1, 2);
    auto P = presentation_for(env, cmd);
    ReesEquations E = rees_ideal(P, env.gb);
    json by_deg = json::object();
    for (long d = 1; d <= E.max_degree(); ++d) {
      auto fs = E.generators_of_degree(d);
      if (!fs.empty()) by_deg[std::to_string(d)] = polys_json(fs);
    }
    rep["result"]["ring"] = E.s_ring->to_string();
    rep["result"]["generators_by_degree"] = std::move(by_deg);
    rep["result"]["relations"] = polys_json(E.relations_in_s);
    stats_from(rep, E.stats);
    text << "equations in " << E.s_ring->to_string() << "\n";
    if (E.generators.empty()) text << "  (zero ideal)";
    for (const auto& f : E.generators)
      text << "  [t-deg " << E.t_degree(f) << "] " << f.to_string() << "\n";
  } else if (cmd.name == "syzygies") {
    need(1, 2);
    auto P = presentation_for(env, cmd);
    ReesEquations E = rees_ideal(P, env.gb);
    auto Z = linear_equations(E);
    json vecs = json::array();
    for (const auto& v : Z.vectors) vecs.push_back(polys_json(v));
    rep["result"]["vectors"] = std::move(vecs);
    stats_from(rep, E.stats);
    text << Z.vectors.size() << " syzygies\n";
    for (const auto& v : Z.vectors) text << "  (" << poly_list(v) << ")\n";
  } else if (cmd.name == "trinomialize") {
    need(1, 2);
    bool refined = false;
    if (args.size() == 2) {
      if (args[1].kind != ScriptArg::Kind::Name || args[1].name != "refined")
        throw usage("second argument must be 'refined'", cmd);
      refined = true;
    }
    IdealPresentation P(env.ring, named_ideal(env, args[0], cmd));
    auto T = trinomialize(P, refined);
    rep["result"]["ring"] = T.ext_ring->to_string();
    rep["result"]["generators"] = polys_json(T.gens);
    json subs = json::array();
    for (const auto& [nm, val] : T.substitution)
      subs.push_back({{"var", nm}, {"value", val.to_string()}});
    rep["result"]["substitution"] = std::move(subs);
    rep["result"]["new_vars"] = T.new_vars;
    text << "generators in " << T.ext_ring->to_string() << ":\n";
    for (const auto& f : T.gens) text << "  " << f.to_string() << "\n";
    for (const auto& [nm, val] : T.substitution)
      text << "  " << nm << " -> " << val.to_string() << "\n";
  } else if (cmd.name == "jdual") {
    need(1, 1);
    const auto& M = named_matrix(env, args[0], cmd);
    std::vector<std::size_t> xv(env.ring->arity());
    std::iota(xv.begin(), xv.end(), 0);
    auto B = jacobian_dual(M, xv);
    rep["result"] = matrix_json(B);
    rep["result"]["ring"] = B.ring()->to_string();
    text << "dual matrix " << B.rows() << " x " << B.cols() << " over "
         << B.ring()->to_string() << "\n";
    for (std::size_t i = 0; i < B.rows(); ++i) {
      text << "  [";
      for (std::size_t j = 0; j < B.cols(); ++j)
        text << (j ? ", " : "") << B.at(i, j).to_string();
      text << "]\n";
    }
  } else if (cmd.name == "expected") {
    need(2, 2);
    IdealPresentation P(env.ring, named_ideal(env, args[0], cmd));
    auto R = expected_equations_check(P, named_matrix(env, args[1], cmd),
                                      env.gb);
    rep["result"]["holds"] = R.holds;
    rep["result"]["profile"] = profile_json(R.profile);
    rep["result"]["top_minors"] = polys_json(R.top_minors);
    if (R.witness) rep["result"]["witness"] = R.witness->to_string();
    text << "expected equations "
         << (R.holds ? "generate" : "do not generate") << "\n  "
         << profile_text(R.profile);
    if (R.witness) text << "\n  witness: " << R.witness->to_string();
  } else if (cmd.name == "hilbert_burch") {
    need(3, 3);
    IdealPresentation P(env.ring, named_ideal(env, args[0], cmd));
    bool ok = hilbert_burch_check(P, poly_arg(args[1], cmd),
                                  named_matrix(env, args[2], cmd), env.gb);
    rep["result"]["holds"] = ok;
    text << "structure " << (ok ? "confirmed" : "refuted");
  } else if (cmd.name == "intersect") {
    need(2, 2);
    Ideal I(env.ring, named_ideal(env, args[0], cmd));
    Ideal J(env.ring, named_ideal(env, args[1], cmd));
    auto R = intersect(I, J, env.gb);
    rep["result"]["generators"] = polys_json(R.gb(env.gb).elements);
    text << "intersection: " << poly_list(R.gb(env.gb).elements);
  } else if (cmd.name == "colon") {
    need(2, 2);
    Ideal I(env.ring, named_ideal(env, args[0], cmd));
    Ideal R = args[1].kind == ScriptArg::Kind::Name
                  ? colon_ideal(I, Ideal(env.ring, named_ideal(env, args[1], cmd)),
                                env.gb)
                  : colon(I, poly_arg(args[1], cmd), env.gb);
    rep["result"]["generators"] = polys_json(R.gb(env.gb).elements);
    text << "colon: " << poly_list(R.gb(env.gb).elements);
  } else if (cmd.name == "dim") {
    need(1, 1);
    Ideal I(env.ring, named_ideal(env, args[0], cmd));
    unsigned d = krull_dimension(I, env.gb);
    rep["result"]["dimension"] = d;
    rep["result"]["height"] = static_cast<unsigned>(env.ring->arity()) - d;
    text << "dimension: " << d
         << ", height: " << env.ring->arity() - d;
  } else if (cmd.name == "member") {
    need(2, 2);
    Polynomial f = poly_arg(args[0], cmd);
    Ideal I(env.ring, named_ideal(env, args[1], cmd));
    bool in = I.contains(f, env.gb);
    bool rad = radical_membership(f, I, env.gb);
    rep["result"]["in_ideal"] = in;
    rep["result"]["in_radical"] = rad;
    text << "in ideal: " << (in ? "yes" : "no")
         << "\n  in radical: " << (rad ? "yes" : "no");
  } else if (cmd.name == "curve") {
    need(3, 3);
    Ideal C;
    bool warned = false;
    bool all_int = true;
    for (const auto& a : args)
      if (a.kind != ScriptArg::Kind::Int) all_int = false;
    if (all_int) {
      auto mc = monomial_curve_ideal(int_arg(args[0], cmd),
                                     int_arg(args[1], cmd),
                                     int_arg(args[2], cmd),
                                     env.ring->field(), env.gb);
      C = mc.ideal;
      warned = !mc.gcd_is_one;
    } else {
      std::vector<Polynomial> images;
      for (const auto& a : args) images.push_back(poly_arg(a, cmd));
      C = parametrized_curve_ideal(images, {"x", "y", "z"}, env.gb);
    }
    rep["result"]["generators"] = polys_json(C.gens());
    if (warned) rep["result"]["gcd_warning"] = true;
    text << "curve ideal: " << poly_list(C.gens());
    if (warned) text << "\n  warning: exponent gcd is not 1";
    if (!C.is_zero_ideal(env.gb)) {
      auto prof = relation_type(IdealPresentation(C.ring(), C.gens()), env.gb);
      rep["result"]["profile"] = profile_json(prof);
      text << "\n  " << profile_text(prof);
    }
  } else if (cmd.name == "hn") {
    need(6, 6);
    std::array<long, 3> a{int_arg(args[0], cmd), int_arg(args[1], cmd),
                          int_arg(args[2], cmd)};
    std::array<long, 3> b{int_arg(args[3], cmd), int_arg(args[4], cmd),
                          int_arg(args[5], cmd)};
    auto H = herzog_northcott(a, b, env.ring->field());
    rep["result"]["generators"] = polys_json(H.gens);
    rep["result"]["m"] = {H.m[0], H.m[1], H.m[2]};
    rep["result"]["gcd_m_is_one"] = H.gcd_m_is_one;
    auto prof = relation_type(IdealPresentation(H.ring, H.gens), env.gb);
    rep["result"]["profile"] = profile_json(prof);
    text << "generators: " << poly_list(H.gens) << "\n  m = (" << H.m[0]
         << ", " << H.m[1] << ", " << H.m[2] << "), gcd "
         << (H.gcd_m_is_one ? "1" : "not 1") << "\n  " << profile_text(prof);
  } else if (cmd.name == "cycle") {
    need(1, 1);
    long n = int_arg(args[0], cmd);
    if (n < 4 || n % 2)
      throw PreconditionError("cycle: n must be even and >= 4");
    auto C = cycle_edge_ideal(static_cast<unsigned>(n), env.ring->field());
    rep["result"]["generators"] = polys_json(C.gens());
    text << "edge ideal: " << poly_list(C.gens());
  } else if (cmd.name == "strip") {
    need(1, 1);
    Ideal I(env.ring, named_ideal(env, args[0], cmd));
    auto S = strip_principal_part(I, env.gb);
    rep["result"]["g"] = S.g.to_string();
    rep["result"]["factor_generators"] = polys_json(S.factor.gens());
    rep["result"]["exact"] = S.factorization_exact;
    text << "g = " << S.g.to_string() << "\n  factor: "
         << poly_list(S.factor.gens()) << "\n  exact: "
         << (S.factorization_exact ? "yes" : "no");
  } else if (cmd.name == "equidim") {
    if (args.size() < 2 || args.size() % 2)
      throw usage("expected ideal/height pairs", cmd);
    std::vector<std::pair<Ideal, unsigned>> comps;
    for (std::size_t i = 0; i < args.size(); i += 2) {
      long h = int_arg(args[i + 1], cmd);
      if (h < 0) throw usage("height must be nonnegative", cmd);
      comps.emplace_back(Ideal(env.ring, named_ideal(env, args[i], cmd)),
                         static_cast<unsigned>(h));
    }
    auto R = equidimensional_reduce(comps, env.gb);
    rep["result"]["full_generators"] = polys_json(R.full.gens());
    rep["result"]["profile_full"] = profile_json(R.rt_full);
    if (R.reduced) {
      rep["result"]["reduced_generators"] = polys_json(R.reduced->gens());
      rep["result"]["profile_reduced"] = profile_json(*R.rt_reduced);
    }
    rep["result"]["agrees"] = R.agrees;
    text << "full intersection " << profile_text(R.rt_full);
    if (R.rt_reduced)
      text << "\n  mid-height part " << profile_text(*R.rt_reduced);
    text << "\n  agrees: " << (R.agrees ? "yes" : "no");
  } else {
    throw usage("unhandled command", cmd);
  }
}

void build_decl(Env& env, const ScriptDecl& decl) {
  if (!decl.is_matrix) {
    std::vector<Polynomial> gens;
    for (const auto& a : decl.args) {
      if (a.kind == ScriptArg::Kind::Name)
        throw ScriptError("ideal generators must be polynomials", a.line,
                          a.col);
      gens.push_back(a.poly);
    }
    if (gens.empty()) gens.push_back(Polynomial::zero(env.ring));
    env.ideals.emplace(decl.name, std::move(gens));
    return;
  }
  if (decl.args.size() < 2 || decl.args[0].kind != ScriptArg::Kind::Int ||
      decl.args[1].kind != ScriptArg::Kind::Int)
    throw ScriptError("matrix needs (rows, cols, entries...)", decl.line,
                      decl.col);
  long rows = decl.args[0].integer, cols = decl.args[1].integer;
  if (rows <= 0 || cols <= 0 ||
      decl.args.size() != 2 + static_cast<std::size_t>(rows * cols))
    throw ScriptError("matrix entry count mismatch", decl.line, decl.col);
  std::vector<Polynomial> entries;
  for (std::size_t i = 2; i < decl.args.size(); ++i) {
    if (decl.args[i].kind == ScriptArg::Kind::Name)
      throw ScriptError("matrix entries must be polynomials",
                        decl.args[i].line, decl.args[i].col);
    entries.push_back(decl.args[i].poly);
  }
  env.matrices.emplace(decl.name,
                       PolyMatrix(env.ring, static_cast<std::size_t>(rows),
                                  static_cast<std::size_t>(cols),
                                  std::move(entries)));
}

// One JSON object per report, newline-delimited.
std::string dump_reports(const json& reports) {
  std::string s;
  for (const auto& rep : reports) s += rep.dump() + "\n";
  return s;
}

}  // namespace

RunResult run_script(const std::string& text, const RunOptions& opts) {
  RunResult res;
  json reports = json::array();
  std::ostringstream out;
  std::string command_label = "parse";
  auto finish_error = [&](int code, const std::string& status,
                          const std::string& msg) {
    res.exit_code = code;
    res.error = msg;
    if (opts.json) {
      json rep;
      rep["command"] = command_label;
      rep["status"] = status;
      rep["error"] = msg;
      if (status == "resource-abort") {
        rep["stats"]["degree_bound"] = opts.degree_bound;
      }
      reports.push_back(std::move(rep));
      res.output = dump_reports(reports);
    } else {
      res.output = out.str();  // the diagnostic goes to stderr
    }
    return res;
  };

  Script script;
  try {
    ParseOptions popts;
    popts.field_override = opts.field_override;
    popts.order_override = opts.order_override;
    script = parse_script(text, popts);
  } catch (const ScriptError& e) {
    return finish_error(1, "input-error", e.what());
  }

  Env env;
  env.ring = script.ring;
  env.gb.degree_bound = opts.degree_bound;
  env.gb.timeout_seconds = opts.timeout_seconds;

  std::size_t di = 0, ci = 0;
  try {
    for (; di < script.decls.size(); ++di) {
      command_label = script.decls[di].name;
      build_decl(env, script.decls[di]);
    }
    for (; ci < script.commands.size(); ++ci) {
      const auto& cmd = script.commands[ci];
      command_label = cmd.name;
      json rep;
      rep["command"] = cmd.name;
      rep["field"] = env.ring->field().to_string();
      rep["ring"] = env.ring->to_string();
      rep["result"] = json::object();
      rep["stats"] = json::object();
      if (opts.with_stats) rep["stats"]["seed"] = opts.seed;
      std::ostringstream block;
      exec_command(env, cmd, rep, block);
      if (!opts.with_stats)
        rep["stats"] = json::object();  // counts only on request
      rep["status"] = "ok";
      reports.push_back(std::move(rep));
      out << cmd.name << ":\n  "
          << block.str() << "\n";
    }
  } catch (const ScriptError& e) {
    return finish_error(1, "input-error", e.what());
  } catch (const ResourceAbort& e) {
    return finish_error(2, "resource-abort", e.what());
  } catch (const PreconditionError& e) {
    return finish_error(3, "precondition-violated", e.what());
  } catch (const std::invalid_argument& e) {
    return finish_error(3, "precondition-violated", e.what());
  }

  res.output = opts.json ? dump_reports(reports) : out.str();
  return res;
}

}  // namespace reltype
