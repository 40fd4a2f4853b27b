// Copyright 2026 The stci Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stci/cli/app.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stci/cli/report.hpp"
#include "stci/core/gcd.hpp"
#include "stci/core/parse.hpp"
#include "stci/ideal/deadline.hpp"

namespace stci::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
  std::string curve = "4,3,1";
  std::string field = "q";
  std::string order = "grevlex";
  std::string strict = "full";
  std::string only;
  std::string ring = "w,x,y,z";
  std::string eliminate_vars = "s,t";
  bool json = false;
  bool timings = false;
  int timeout_seconds = 0;
};

class Sources {
 public:
  explicit Sources(std::istream& in) : in_(in) {}

  // "-" is stdin (read once), an existing path is read, anything else is the text itself.
  std::string read(const std::string& arg) {
    if (arg == "-") {
      if (stdin_used_) throw InvalidArgument("stdin ('-') may be given only once");
      stdin_used_ = true;
      std::ostringstream s;
      s << in_.rdbuf();
      return s.str();
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
      std::ifstream f(arg);
      if (!f) throw InvalidArgument("cannot read " + arg);
      std::ostringstream s;
      s << f.rdbuf();
      return s.str();
    }
    return arg;
  }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

Field field_of(const Globals& g) { return Field::parse(g.field); }
CurveSpec curve_of(const Globals& g) { return CurveSpec::parse(g.curve, field_of(g)); }

MonomialOrder order_of(const Globals& g) {
  if (g.order == "grevlex") return MonomialOrder::grevlex();
  if (g.order == "lex") return MonomialOrder::lex();
  throw InvalidArgument("unknown order '" + g.order + "' (expected grevlex or lex)");
}

VariableSet ring_of(const Globals& g) {
  const VariableSet ring = parse_variable_set(g.ring);
  if (ring.contains(Var::u) || ring.contains(Var::v))
    throw InvalidArgument("variables u and v are reserved for internal use");
  if (ring.empty()) throw InvalidArgument("empty ring");
  return ring;
}

std::optional<std::chrono::seconds> timeout_of(const Globals& g) {
  if (g.timeout_seconds < 0) throw InvalidArgument("--timeout-seconds must be positive");
  if (g.timeout_seconds == 0) return std::nullopt;
  return std::chrono::seconds(g.timeout_seconds);
}

json string_list(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.str());
  return a;
}

void print_list(std::ostream& out, const std::vector<Polynomial>& ps, bool as_json) {
  if (as_json) {
    out << string_list(ps).dump(2) << "\n";
    return;
  }
  for (const auto& p : ps) out << p.str() << "\n";
}

void print_bool(std::ostream& out, const char* key, bool v, bool as_json) {
  if (as_json)
    out << json{{key, v}}.dump(2) << "\n";
  else
    out << (v ? "true" : "false") << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  Globals g;
  CLI::App app{"Exact checks for set-theoretic complete intersections of monomial space curves", "stci"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--curve", g.curve, "Curve d,a,b for [s^d : s^a t^b : s^b t^a : t^d]")->capture_default_str();
  app.add_option("--field", g.field, "Coefficient field: q or fp:P")->capture_default_str();
  app.add_option("--order", g.order, "Monomial order for ideal gb: grevlex or lex")->capture_default_str();
  app.add_option("--strict", g.strict, "Identity strictness: containment or full")->capture_default_str();
  app.add_option("--only", g.only, "Comma-separated subset of checks to run");
  app.add_option("--ring", g.ring, "Ring variables for ideal commands")->capture_default_str();
  app.add_flag("--json", g.json, "Print JSON instead of plain text");
  app.add_flag("--timings", g.timings, "Add per-check seconds to the check report");
  app.add_option("--timeout-seconds", g.timeout_seconds, "Abort any Groebner run after N seconds (exit 3)")
      ->check(CLI::NonNegativeNumber);

  std::function<int()> action;
  Sources sources(in);
  auto parse_in = [&](const std::string& arg, VariableSet ring) {
    return parse_polynomial(sources.read(arg), ring, field_of(g));
  };
  auto parse_list_in = [&](const std::string& arg, VariableSet ring) {
    return parse_polynomial_list(sources.read(arg), ring, field_of(g));
  };

  auto* curve_cmd = app.add_subcommand("curve-ideal", "Generators of the curve's prime ideal");
  curve_cmd->callback([&] {
    action = [&] {
      print_list(out, curve_ideal(curve_of(g)).generators(), g.json);
      return 0;
    };
  });

  std::string poly_arg, poly_arg2;
  auto* dec_cmd = app.add_subcommand("decompose", "Bihomogeneous components, ascending first degree");
  dec_cmd->add_option("poly", poly_arg, "Polynomial text, file, or - for stdin")->required();
  dec_cmd->callback([&] {
    action = [&] {
      const CurveSpec c = curve_of(g);
      const Decomposition d = decompose_bihomogeneous(c, parse_in(poly_arg, VariableSet::base()));
      json arr = json::array();
      for (const auto& comp : d.components) {
        if (g.json)
          arr.push_back(json{{"bidegree", json::array({comp.degree.i, comp.degree.j})}, {"component", comp.part.str()}});
        else
          out << "(" << comp.degree.i << "," << comp.degree.j << ") " << comp.part.str() << "\n";
      }
      if (g.json) out << arr.dump(2) << "\n";
      return 0;
    };
  });

  auto* gcd_cmd = app.add_subcommand("gcd", "Greatest common divisor of two polynomials");
  gcd_cmd->add_option("a", poly_arg, "First polynomial")->required();
  gcd_cmd->add_option("b", poly_arg2, "Second polynomial")->required();
  gcd_cmd->callback([&] {
    action = [&] {
      const VariableSet ring = ring_of(g) | VariableSet::base();
      const Polynomial h = gcd_poly(parse_in(poly_arg, ring), parse_in(poly_arg2, ring));
      if (g.json)
        out << json{{"gcd", h.str()}}.dump(2) << "\n";
      else
        out << h.str() << "\n";
      return 0;
    };
  });

  auto* ideal_cmd = app.add_subcommand("ideal", "Ideal calculus over --ring");
  ideal_cmd->require_subcommand(1);
  std::string gens_arg, gens_arg2;

  auto* gb_cmd = ideal_cmd->add_subcommand("gb", "Reduced Groebner basis under --order");
  gb_cmd->add_option("gens", gens_arg, "Generators")->required();
  gb_cmd->callback([&] {
    action = [&] {
      const VariableSet ring = ring_of(g);
      const Ideal I(ring, field_of(g), parse_list_in(gens_arg, ring));
      print_list(out, I.groebner(order_of(g)).elements(), g.json);
      return 0;
    };
  });

  auto* member_cmd = ideal_cmd->add_subcommand("member", "Is the polynomial in the ideal");
  member_cmd->add_option("poly", poly_arg, "Polynomial")->required();
  member_cmd->add_option("gens", gens_arg, "Generators")->required();
  member_cmd->callback([&] {
    action = [&] {
      const VariableSet ring = ring_of(g);
      const Polynomial f = parse_in(poly_arg, ring);
      print_bool(out, "member", in_ideal(f, Ideal(ring, field_of(g), parse_list_in(gens_arg, ring))), g.json);
      return 0;
    };
  });

  auto* rad_cmd = ideal_cmd->add_subcommand("radical-member", "Is the polynomial in the radical of the ideal");
  rad_cmd->add_option("poly", poly_arg, "Polynomial")->required();
  rad_cmd->add_option("gens", gens_arg, "Generators")->required();
  rad_cmd->callback([&] {
    action = [&] {
      const VariableSet ring = ring_of(g);
      const Polynomial f = parse_in(poly_arg, ring);
      print_bool(out, "radical_member", in_radical(f, Ideal(ring, field_of(g), parse_list_in(gens_arg, ring))),
                 g.json);
      return 0;
    };
  });

  auto* int_cmd = ideal_cmd->add_subcommand("intersect", "Intersection of two ideals");
  int_cmd->add_option("gens_a", gens_arg, "Generators of the first ideal")->required();
  int_cmd->add_option("gens_b", gens_arg2, "Generators of the second ideal")->required();
  int_cmd->callback([&] {
    action = [&] {
      const VariableSet ring = ring_of(g);
      const Ideal I(ring, field_of(g), parse_list_in(gens_arg, ring));
      const Ideal J(ring, field_of(g), parse_list_in(gens_arg2, ring));
      print_list(out, intersect_ideals(I, J).generators(), g.json);
      return 0;
    };
  });

  auto* sat_cmd = ideal_cmd->add_subcommand("saturate", "Saturation I : f^infinity");
  sat_cmd->add_option("gens", gens_arg, "Generators of I")->required();
  sat_cmd->add_option("poly", poly_arg, "The polynomial f")->required();
  sat_cmd->callback([&] {
    action = [&] {
      const VariableSet ring = ring_of(g);
      const Ideal I(ring, field_of(g), parse_list_in(gens_arg, ring));
      print_list(out, saturate(I, parse_in(poly_arg, ring)).generators(), g.json);
      return 0;
    };
  });

  auto* elim_cmd = ideal_cmd->add_subcommand("eliminate", "Elimination ideal I cap k[ring minus --vars]");
  elim_cmd->add_option("gens", gens_arg, "Generators")->required();
  elim_cmd->add_option("--vars", g.eliminate_vars, "Variables to eliminate")->capture_default_str();
  elim_cmd->callback([&] {
    action = [&] {
      const VariableSet ring = ring_of(g);
      const VariableSet front = parse_variable_set(g.eliminate_vars);
      if (!ring.contains(front)) throw InvalidArgument("--vars must be a subset of --ring");
      const Ideal I(ring, field_of(g), parse_list_in(gens_arg, ring));
      print_list(out, eliminate(I, front).generators(), g.json);
      return 0;
    };
  });

  auto* dim_cmd = ideal_cmd->add_subcommand("dim", "Krull dimension of ring/I");
  dim_cmd->add_option("gens", gens_arg, "Generators")->required();
  dim_cmd->callback([&] {
    action = [&] {
      const VariableSet ring = ring_of(g);
      const std::size_t d = dimension(Ideal(ring, field_of(g), parse_list_in(gens_arg, ring)));
      if (g.json)
        out << json{{"dimension", d}}.dump(2) << "\n";
      else
        out << d << "\n";
      return 0;
    };
  });

  auto* check_cmd = app.add_subcommand("check", "Full report on a candidate pair f, g (JSON on stdout)");
  check_cmd->add_option("f", poly_arg, "First form")->required();
  check_cmd->add_option("g", poly_arg2, "Second form")->required();
  check_cmd->callback([&] {
    action = [&] {
      const CurveSpec c = curve_of(g);
      CheckOptions opts;
      if (g.strict == "full")
        opts.strictness = Strictness::full_equality;
      else if (g.strict == "containment")
        opts.strictness = Strictness::containment_only;
      else
        throw InvalidArgument("unknown strictness '" + g.strict + "' (expected containment or full)");
      if (!g.only.empty()) {
        std::istringstream items(g.only);
        std::string item;
        while (std::getline(items, item, ',')) {
          if (item.empty()) continue;
          const auto& names = check_names();
          if (std::find(names.begin(), names.end(), item) == names.end())
            throw InvalidArgument("unknown check '" + item + "'");
          opts.only.insert(item);
        }
      }
      opts.timeout = timeout_of(g);
      opts.timings = g.timings;
      const Polynomial f = parse_in(poly_arg, VariableSet::base());
      const Polynomial gg = parse_in(poly_arg2, VariableSet::base());
      const CandidatePair pair = CandidatePair::make(f, gg, c);
      err << "warning: the curve is not tested for being arithmetically Cohen-Macaulay; "
             "the necessary conditions concern non-ACM curves\n";
      const CheckReport report = run_check(pair, opts);
      out << serialize_report(report);
      for (const auto& [name, e] : report.verdicts) {
        if (e.verdict == Verdict::skipped) continue;
        err << name << ": " << verdict_name(e.verdict);
        if (e.note) err << " (" << *e.note << ")";
        err << "\n";
      }
      if (report.char_p_caveat)
        err << "note: positive characteristic; a failed condition here refutes nothing in characteristic zero\n";
      return exit_code(report);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (!action) return 2;
  try {
    DeadlineScope scope(timeout_of(g));
    return action();
  } catch (const Timeout& e) {
    err << "error: timed out: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace stci::cli
