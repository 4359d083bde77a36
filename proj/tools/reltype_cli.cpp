#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "reltype/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"relation-type calculator for ideals in polynomial rings"};

  std::string script_path;
  std::string field_str;
  std::string order_str;
  reltype::RunOptions opts;

  app.add_option("script", script_path,
                 "script file ('-' or omitted reads stdin)");
  app.add_option("--field", field_str,
                 "override the script's field: QQ or GF(p)");
  app.add_option("--order", order_str, "monomial order: lex or degrevlex");
  app.add_option("--degree-bound", opts.degree_bound,
                 "abort past this intermediate total degree")
      ->default_val(60u);
  app.add_option("--timeout", opts.timeout_seconds,
                 "abort after this many seconds (0 = none)");
  app.add_flag("--json", opts.json, "machine-readable reports");
  app.add_flag("--stats", opts.with_stats, "include engine statistics");
  app.add_option("--seed", opts.seed, "seed for randomized commands");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 1 : 0;
  }

  if (!field_str.empty()) {
    reltype::FieldDesc f;
    if (field_str == "QQ") {
      f.characteristic = 0;
    } else if (field_str.rfind("GF(", 0) == 0 && field_str.back() == ')') {
      try {
        f.characteristic =
            std::stoull(field_str.substr(3, field_str.size() - 4));
      } catch (const std::exception&) {
        std::cerr << "error: bad --field value '" << field_str << "'\n";
        return 1;
      }
      if (!reltype::is_prime_u64(f.characteristic)) {
        std::cerr << "error: --field GF(p) needs a prime\n";
        return 1;
      }
    } else {
      std::cerr << "error: --field must be QQ or GF(p)\n";
      return 1;
    }
    opts.field_override = f;
  }
  if (!order_str.empty()) {
    reltype::OrderSpec o;
    if (order_str == "lex") {
      o.kind = reltype::OrderSpec::Kind::Lex;
    } else if (order_str == "degrevlex") {
      o.kind = reltype::OrderSpec::Kind::DegRevLex;
    } else {
      std::cerr << "error: --order must be lex or degrevlex\n";
      return 1;
    }
    opts.order_override = o;
  }

  std::string text;
  if (script_path.empty() || script_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(script_path);
    if (!in) {
      std::cerr << "error: cannot open '" << script_path << "'\n";
      return 1;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  reltype::RunResult res = reltype::run_script(text, opts);
  std::cout << res.output;
  if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
  return res.exit_code;
}
