// boyd14: command-line front end for the conductor-14 verifications.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "boyd14/curves/curve.hpp"
#include "boyd14/modforms/qseries.hpp"
#include "boyd14/pipeline/compute.hpp"
#include "boyd14/pipeline/search.hpp"
#include "boyd14/pipeline/verify.hpp"

using namespace boyd14;
using namespace boyd14::pipeline;

namespace {

struct Common {
  std::string json_out;
  bool no_cache = false;
  std::optional<Cache> cache;

  const Cache* open() {
    if (!no_cache) cache = Cache::from_env();
    return cache ? &*cache : nullptr;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--json", c.json_out, "Write the JSON report to this file ('-' for stdout)");
  cmd->add_flag("--no-cache", c.no_cache, "Ignore BOYD14_CACHE_DIR");
}

void print_human(const Report& r, std::ostream& os) {
  os << r.command << ": " << r.subject << "\n";
  for (auto& c : r.checks) {
    os << (c.pass() ? "  PASS  " : "  FAIL  ") << c.name << "\n"
       << "        " << c.lhs_expr << " = " << c.lhs.to_string(static_cast<int>(r.digits)) << "\n"
       << "        " << c.rhs_expr << " = " << c.rhs.to_string(static_cast<int>(r.digits)) << "\n"
       << "        " << (c.relative ? "rel" : "abs")
       << " diff = " << (c.relative ? c.rel_diff() : c.abs_diff()).to_string(3) << " (tol " << c.tolerance << ")\n";
  }
  for (auto& e : r.exact) os << (e.pass ? "  PASS  " : "  FAIL  ") << e.name << ": " << e.detail << "\n";
  if (!r.extra.empty() && r.checks.empty() && r.exact.empty()) os << r.extra.dump(2) << "\n";
  os << (r.ok() ? "all checks passed" : "FAILED") << " in " << r.wall_seconds << " s\n";
}

int finish(const Report& r, const Common& c) {
  if (c.json_out == "-") {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    print_human(r, std::cout);
    if (!c.json_out.empty()) {
      std::ofstream out(c.json_out);
      if (!out) throw std::runtime_error("cannot write " + c.json_out);
      out << r.to_json().dump(2) << "\n";
    }
  }
  for (auto& f : r.failures()) std::cerr << "failed: " << f << "\n";
  return r.ok() ? 0 : 1;
}

Report value_report(const std::string& command, const std::string& subject, unsigned digits, nlohmann::json result) {
  Report r;
  r.command = command;
  r.subject = subject;
  r.digits = digits;
  r.extra = std::move(result);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification of Boyd's conductor-14 Mahler measure identities"};
  app.require_subcommand(1);

  // verify boyd | keystone
  auto* verify = app.add_subcommand("verify", "Run a verification pipeline");
  verify->require_subcommand(1);
  Common vb_common;
  int id = 1;
  Settings vb;
  auto* boyd = verify->add_subcommand("boyd", "One of the five identities m = c L(f14, 2) / pi^2");
  boyd->add_option("--id", id, "1: n(-1), 2: n(5), 3: g(1), 4: g(7), 5: g(-8)")->required()->check(CLI::Range(1, 5));
  boyd->add_option("--digits", vb.digits, "Digits for the L-value and dilogarithm routes")->check(CLI::Range(20, 200));
  boyd->add_option("--mahler-digits", vb.mahler_digits, "Digits for the quadrature")->check(CLI::Range(8, 30));
  add_common(boyd, vb_common);

  Common ks_common;
  Settings ks;
  auto* keystone = verify->add_subcommand("keystone", "R_{E_g(1)}(P) and R_{E_g(7)}([P+Q]-[P]) against L(f14, 2)");
  keystone->add_option("--digits", ks.digits, "Working digits")->check(CLI::Range(20, 200));
  add_common(keystone, ks_common);

  // search
  Common se_common;
  SearchRequest req;
  bool no_eval = false;
  auto* search = app.add_subcommand("search", "Parallel-line search over a torsion subgroup");
  search->add_option("--curve", req.curve, "Eg(k), En(k), D(a1,a3), W(a1,a2,a3,a4,a6), SW(a,b) or y^2=x^3+...");
  search->add_option("--group", req.group, "Generators: named points, (x,y), 2tors, 3tors");
  search->add_option("--field", req.field, "Q, Q(k), Q(zeta3) or Q(zeta7)");
  search->add_option("--digits", req.digits, "Digits for evaluating each certificate");
  search->add_flag("--no-eval", no_eval, "Skip the numeric check of certificates");
  add_common(search, se_common);

  // compute lvalue | mahler | dilog
  auto* compute = app.add_subcommand("compute", "Evaluate a single quantity");
  compute->require_subcommand(1);
  Common lv_common;
  int s_arg = 2;
  unsigned lv_digits = 30;
  std::string coeff_file;
  long level = 14;
  auto* lvalue = compute->add_subcommand("lvalue", "L(f, s) at s = 1 or 2");
  lvalue->add_option("--s", s_arg, "Point of evaluation")->check(CLI::IsMember({1, 2}));
  lvalue->add_option("--digits", lv_digits, "Working digits")->check(CLI::Range(10, 400));
  lvalue->add_option("--coefficients", coeff_file, "CSV of a_n (header n,a); default f14 from eta products");
  lvalue->add_option("--level", level, "Level of the form in --coefficients");
  add_common(lvalue, lv_common);

  Common mm_common;
  std::string poly_text, family;
  std::string k_text;
  unsigned mm_digits = 15;
  auto* mahler_cmd = compute->add_subcommand("mahler", "Mahler measure by Jensen's formula and quadrature");
  mahler_cmd->add_option("--poly", poly_text, "Polynomial in y, z");
  mahler_cmd->add_option("--family", family, "n or g")->check(CLI::IsMember({"n", "g"}));
  mahler_cmd->add_option("--k", k_text, "Family parameter (rational)");
  mahler_cmd->add_option("--digits", mm_digits, "Target digits")->check(CLI::Range(6, 30));
  add_common(mahler_cmd, mm_common);

  Common dl_common;
  std::string dl_curve = "Eg(1)", dl_field = "Q", dl_divisor = "[P]", dl_form = "du";
  unsigned dl_digits = 30;
  auto* dilog = compute->add_subcommand("dilog", "R on a divisor of a curve");
  dilog->add_option("--curve", dl_curve, "Curve descriptor");
  dilog->add_option("--field", dl_field, "Field of definition of the points");
  dilog->add_option("--divisor", dl_divisor, "e.g. \"[P+Q]-[P]\" or \"-[A]-[4A]+[A+Q]\"");
  dilog->add_option("--form", dl_form, "du (lattice <1, tau>) or omega (Deuring differential)")
      ->check(CLI::IsMember({"du", "omega"}));
  dilog->add_option("--digits", dl_digits, "Working digits")->check(CLI::Range(10, 200));
  add_common(dilog, dl_common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*boyd) {
      vb.cache = vb_common.open();
      return finish(run_conjecture(id, vb), vb_common);
    }
    if (*keystone) {
      ks.cache = ks_common.open();
      return finish(run_keystone(ks), ks_common);
    }
    if (*search) {
      req.evaluate = !no_eval;
      return finish(run_search(req), se_common);
    }
    if (*lvalue) {
      const Cache* cache = lv_common.open();
      unsigned bits = bits_for_digits(lv_digits);
      modforms::LValue l;
      if (coeff_file.empty()) {
        l = l_f14(s_arg, bits, cache);
      } else {
        std::ifstream in(coeff_file);
        if (!in) throw std::runtime_error("cannot read " + coeff_file);
        l = l_from_coefficients(modforms::read_coefficients_csv(in), level, s_arg, bits);
      }
      return finish(value_report("compute lvalue", "L(f, " + std::to_string(s_arg) + ")", lv_digits,
                                 {{"level", level},
                                  {"s", s_arg},
                                  {"value", l.value.to_string(static_cast<int>(lv_digits))},
                                  {"error", l.error.to_string(3)},
                                  {"root_number", l.root_number},
                                  {"terms", l.terms}}),
                    lv_common);
    }
    if (*mahler_cmd) {
      const Cache* cache = mm_common.open();
      mahler::MahlerResult m;
      std::string subject;
      if (!poly_text.empty()) {
        subject = poly_text;
        m = poly_m(mahler::BivariatePoly::parse(poly_text), mm_digits, cache);
      } else {
        if (family.empty() || k_text.empty()) throw CLI::ValidationError("compute mahler", "need --poly or --family and --k");
        mpq_class k(k_text);
        k.canonicalize();
        auto f = family == "n" ? curves::Family::n : curves::Family::g;
        subject = family + "(" + k.get_str() + ")";
        m = family_m(f, k, mm_digits, cache);
      }
      return finish(value_report("compute mahler", subject, mm_digits,
                                 {{"value", m.value.to_string(static_cast<int>(mm_digits))},
                                  {"error", m.error.to_string(3)},
                                  {"vanishes_on_torus", m.vanishes_on_torus},
                                  {"breakpoints", m.breakpoints}}),
                    mm_common);
    }
    if (*dilog) {
      const Cache* cache = dl_common.open();
      auto curve = curves::parse_curve(dl_curve, parse_field(dl_field))->over(parse_field(dl_field));
      auto d = parse_divisor(curve, dl_divisor);
      edilog::DivisorOptions o;
      o.form = dl_form == "du" ? edilog::Form::du : edilog::Form::omega;
      Real v = r_value(d, bits_for_digits(dl_digits), cache, o);
      return finish(value_report("compute dilog", dl_curve + " " + dl_divisor, dl_digits,
                                 {{"divisor", d.to_string()},
                                  {"form", dl_form},
                                  {"value", v.to_string(static_cast<int>(dl_digits))}}),
                    dl_common);
    }
  } catch (const StageError& e) {
    std::cerr << "stage " << e.stage << " failed: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
