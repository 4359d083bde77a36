#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reltype/constructions.hpp"
#include "reltype/runner.hpp"

namespace py = pybind11;
using namespace reltype;

namespace {

RingPtr ring_from(std::uint64_t characteristic,
                  const std::vector<std::string>& vars) {
  return make_ring(FieldDesc{characteristic}, vars);
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts,
                                  const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

std::vector<std::string> to_strings(const std::vector<Polynomial>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "relation type of ideals via Rees-ideal elimination";

  py::register_exception<ScriptError>(m, "ScriptError");
  py::register_exception<PreconditionError>(m, "PreconditionError");
  py::register_exception<ResourceAbort>(m, "ResourceAbort");

  m.def(
      "run",
      [](const std::string& script, bool json, unsigned degree_bound,
         double timeout, bool stats, unsigned long seed) {
        RunOptions opts;
        opts.json = json;
        opts.degree_bound = degree_bound;
        opts.timeout_seconds = timeout;
        opts.with_stats = stats;
        opts.seed = seed;
        RunResult r = run_script(script, opts);
        return py::make_tuple(r.exit_code, r.output, r.error);
      },
      py::arg("script"), py::arg("json") = false,
      py::arg("degree_bound") = 60, py::arg("timeout") = 0.0,
      py::arg("stats") = false, py::arg("seed") = 0,
      "Run a script; returns (exit_code, output, error).");

  m.def(
      "relation_type",
      [](const std::vector<std::string>& vars,
         const std::vector<std::string>& gens,
         const std::vector<std::string>& relations,
         std::uint64_t characteristic, unsigned degree_bound) {
        auto ring = ring_from(characteristic, vars);
        GBConfig cfg{degree_bound, 0};
        IdealPresentation P(ring, parse_all(gens, ring),
                            parse_all(relations, ring));
        auto prof = relation_type(P, cfg);
        py::dict d;
        d["rt"] = prof.relation_type;
        d["fresh_degrees"] =
            std::vector<long>(prof.fresh_degrees.begin(),
                              prof.fresh_degrees.end());
        d["linear_type"] = prof.is_linear_type;
        d["syzygetic"] = prof.is_syzygetic;
        return d;
      },
      py::arg("vars"), py::arg("gens"),
      py::arg("relations") = std::vector<std::string>{},
      py::arg("characteristic") = 0, py::arg("degree_bound") = 60);

  m.def(
      "rees_equations",
      [](const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, std::uint64_t characteristic,
         unsigned degree_bound) {
        auto ring = ring_from(characteristic, vars);
        GBConfig cfg{degree_bound, 0};
        IdealPresentation P(ring, parse_all(gens, ring));
        auto E = rees_ideal(P, cfg);
        py::dict d;
        d["ring_vars"] = E.s_ring->var_names();
        d["generators"] = to_strings(E.generators);
        return d;
      },
      py::arg("vars"), py::arg("gens"), py::arg("characteristic") = 0,
      py::arg("degree_bound") = 60);

  m.def(
      "groebner",
      [](const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, std::uint64_t characteristic,
         unsigned degree_bound) {
        auto ring = ring_from(characteristic, vars);
        GBConfig cfg{degree_bound, 0};
        auto gb = groebner_basis(ring, parse_all(gens, ring), cfg);
        return to_strings(gb.elements);
      },
      py::arg("vars"), py::arg("gens"), py::arg("characteristic") = 0,
      py::arg("degree_bound") = 60);

  m.def(
      "trinomialize",
      [](const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, bool refined,
         std::uint64_t characteristic) {
        auto ring = ring_from(characteristic, vars);
        IdealPresentation P(ring, parse_all(gens, ring));
        auto T = trinomialize(P, refined);
        py::dict d;
        d["ring_vars"] = T.ext_ring->var_names();
        d["generators"] = to_strings(T.gens);
        py::list subs;
        for (const auto& [nm, val] : T.substitution)
          subs.append(py::make_tuple(nm, val.to_string()));
        d["substitution"] = subs;
        return d;
      },
      py::arg("vars"), py::arg("gens"), py::arg("refined") = false,
      py::arg("characteristic") = 0);
}
