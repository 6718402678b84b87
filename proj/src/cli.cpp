#include "sozeta/cli.hpp"

#include "sozeta/constant_cache.hpp"
#include "sozeta/format.hpp"
#include "sozeta/table.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <sstream>

namespace sozeta {
namespace {

struct Rendered {
  std::string value, err;
};

Rendered render(const PrecisionReal& v, int digits) {
  std::lock_guard lock(mpfr_mutex());
  return {to_fixed(v.value, digits), to_sci(v.err)};
}

nlohmann::json row_json(const ZetaSoArgs& a, const Combo& c, const PrecisionReal& v, int digits) {
  Rendered r = render(v, digits);
  return {{"args", a.as_array()},
          {"terms", to_json(c)},
          {"value", r.value},
          {"err", r.err},
          {"exceptional", a.exceptional()}};
}

std::string combo_in(const Combo& c, Format f) { return f == Format::latex ? to_latex(c) : to_text(c); }

std::string so_name(const ZetaSoArgs& a, Format f) {
  return (f == Format::latex ? "\\zeta_{so}" : "zeta_so") + to_string(a);
}

struct Options {
  bool no_cache = false;
  std::string format = "text";
  std::vector<int> tuple;
  int eval_digits = 0;
  int weight = 0;
  bool regular = false;
  int digits = 30;
  int witten_m = 0;
  int max_weight = 6;
  double tol = 1e-8;
  std::string expr;
};

std::unique_ptr<ConstantCache> open_cache(bool disabled) {
  if (disabled) return nullptr;
  return std::make_unique<ConstantCache>(ConstantCache::default_directory() / ConstantCache::kFileName);
}

int cmd_reduce(const Options& o, ConstantCache* cache, std::ostream& out) {
  ZetaSoArgs a{o.tuple[0], o.tuple[1], o.tuple[2], o.tuple[3]};
  Format f = parse_format(o.format);
  Combo c = reduce_so(a);
  if (f == Format::json) {
    EvalConfig cfg;
    cfg.digits = o.eval_digits > 0 ? o.eval_digits : 30;
    out << row_json(a, c, eval_combo(c, cfg, cache), cfg.digits).dump(2) << '\n';
    return kOk;
  }
  out << combo_in(c, f) << '\n';
  if (o.eval_digits > 0) {
    EvalConfig cfg;
    cfg.digits = o.eval_digits;
    Rendered r = render(eval_combo(c, cfg, cache), cfg.digits);
    out << "= " << r.value << "  (err <= " << r.err << ")\n";
  }
  return kOk;
}

int cmd_table(const Options& o, ConstantCache* cache, std::ostream& out) {
  Format f = parse_format(o.format);
  EvalConfig cfg;
  cfg.digits = o.digits;
  auto rows = build_table(o.weight, o.regular, cfg, cache);
  if (f == Format::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) j.push_back(row_json(r.args, r.combo, r.numeric, cfg.digits));
    out << j.dump(2) << '\n';
    return kOk;
  }
  for (const auto& r : rows) {
    std::string value = render(r.numeric, cfg.digits).value;
    if (f == Format::latex)
      out << so_name(r.args, f) << " &= " << combo_in(r.combo, f) << " = " << value << " \\\\\n";
    else
      out << so_name(r.args, f) << " = " << combo_in(r.combo, f) << " = " << value
          << (r.exceptional ? "  [exceptional]" : "") << '\n';
  }
  out << (f == Format::latex ? "% " : "# ") << rows.size() << (o.regular ? " regular" : " convergent")
      << " tuples of weight " << o.weight << '\n';
  return kOk;
}

int cmd_witten(const Options& o, std::ostream& out) {
  BigRational c = witten_c(o.witten_m);
  EvalConfig cfg;
  cfg.digits = o.digits;
  PrecisionReal pi = pi_value(cfg);
  std::string value;
  {
    std::lock_guard lock(mpfr_mutex());
    PrecisionScope scope(cfg.working_digits());
    Real v = to_real(c) * pow(pi.value, 8 * o.witten_m);
    value = to_fixed(v, cfg.digits);
  }
  out << to_string(c) << " * pi^" << 8 * o.witten_m << " = " << value << '\n';
  return kOk;
}

int cmd_verify(const Options& o, ConstantCache* cache, std::ostream& out) {
  VerifyOptions vo;
  vo.max_weight = o.max_weight;
  vo.tol = o.tol;
  VerifyReport rep = run_verify(vo, cache);
  for (const auto& r : rep.rows) {
    out << to_string(r.args) << (r.exceptional ? " [exceptional]" : "");
    if (r.skipped) {
      out << "  SKIP  " << *r.skipped << '\n';
      continue;
    }
    std::lock_guard lock(mpfr_mutex());
    out << "  reduced " << to_fixed(r.reduced->value, 15) << "  direct " << to_fixed(r.direct->value, 15)
        << "  diff " << to_sci(Real(r.discrepancy)) << (r.passed ? "  PASS" : "  FAIL") << '\n';
  }
  std::ostringstream md;
  md.precision(3);
  md << std::scientific << rep.max_discrepancy;
  out << "max discrepancy " << md.str() << "; " << rep.rows.size() << " rows, " << rep.failures << " failed, "
      << rep.skipped << " skipped\n";
  return rep.ok() ? kOk : kVerifyFailed;
}

int cmd_eval(const Options& o, ConstantCache* cache, std::ostream& out) {
  Combo c = parse_combo(o.expr);
  EvalConfig cfg;
  cfg.digits = o.digits;
  Rendered r = render(eval_combo(c, cfg, cache), cfg.digits);
  out << to_text(c) << "\n= " << r.value << "  (err <= " << r.err << ")\n";
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Reduction and evaluation of so(5) Witten zeta values", "sozeta"};
  app.require_subcommand(1);
  app.add_flag("--no-cache", o.no_cache, "Do not read or write the constant cache");

  auto* reduce = app.add_subcommand("reduce", "Reduce zeta_so(s1,s2,s3,s4) to Euler sums");
  reduce->add_option("s", o.tuple, "s1 s2 s3 s4")->required()->expected(4)->check(CLI::NonNegativeNumber);
  reduce->add_option("--eval", o.eval_digits, "Also evaluate to D digits")->check(CLI::Range(1, 10000));
  reduce->add_option("--format", o.format)->check(CLI::IsMember({"text", "latex", "json"}));

  auto* table = app.add_subcommand("table", "All convergent tuples of one weight");
  table->add_option("W", o.weight)->required()->check(CLI::Range(3, 64));
  table->add_flag("--regular", o.regular, "Skip the two exceptional patterns");
  table->add_option("--format", o.format)->check(CLI::IsMember({"text", "latex", "json"}));
  table->add_option("--digits", o.digits)->check(CLI::Range(1, 10000));

  auto* witten = app.add_subcommand("witten", "c(m) with zeta_so(2m,2m,2m,2m) = c(m) pi^(8m)");
  witten->add_option("M", o.witten_m)->required()->check(CLI::Range(1, 64));
  witten->add_option("--digits", o.digits)->check(CLI::Range(1, 10000));

  auto* verify = app.add_subcommand("verify", "Compare reductions with the direct double sum");
  verify->add_option("--max-weight", o.max_weight)->check(CLI::Range(3, 12));
  verify->add_option("--tol", o.tol)->check(CLI::PositiveNumber);

  auto* eval = app.add_subcommand("eval", "Evaluate a combination such as \"3/2*z(b1,2) + 1/16*z(3)\"");
  eval->add_option("expr", o.expr)->required();
  eval->add_option("--digits", o.digits)->check(CLI::Range(1, 10000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      if (app.get_subcommands().size() == 1) out << app.get_subcommands().front()->help();
      return kOk;
    }
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  auto cache = open_cache(o.no_cache);
  int code = kOk;
  try {
    if (*reduce) code = cmd_reduce(o, cache.get(), out);
    else if (*table) code = cmd_table(o, cache.get(), out);
    else if (*witten) code = cmd_witten(o, out);
    else if (*verify) code = cmd_verify(o, cache.get(), out);
    else if (*eval) code = cmd_eval(o, cache.get(), out);
  } catch (const Divergent& e) {
    err << "error: " << e.what() << '\n';
    return kDivergent;
  } catch (const DivergentTerm& e) {
    err << "error: " << e.what() << '\n';
    return kDivergent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (cache) cache->save();
  return code;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace sozeta
