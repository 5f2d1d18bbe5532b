#include "geodissect/cli.hpp"

#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "geodissect/analysis.hpp"
#include "geodissect/certificate.hpp"
#include "geodissect/json_io.hpp"

namespace geodissect {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::uint64_t> alpha;
  std::optional<std::uint64_t> beta;
  std::optional<std::string> c;
  std::optional<std::uint64_t> count;
  std::optional<std::uint64_t> n_max;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> r;
  std::optional<std::string> dfa_path;
  std::optional<std::string> file;
  std::optional<std::uint64_t> cross_check;
  std::string format = "jsonl";
  std::string set = "pi";
  std::string mode = "geometric";
};

Params require_params(const Options& o) {
  if (!o.alpha || !o.beta) throw UsageError("--alpha and --beta are required");
  return Params(*o.alpha, *o.beta);
}

RationalBound require_c(const Options& o) {
  if (!o.c) throw UsageError("--c is required");
  return RationalBound::parse(*o.c);
}

std::unique_ptr<LengthSet> build_set(const Options& o) {
  if (o.set == "pi") return make_pi(require_params(o));
  if (o.set == "pi-bar") return make_pi_bar(require_params(o), require_c(o));
  if (o.set == "factorial") return make_factorial();
  if (o.set == "ap") {
    if (!o.r) throw UsageError("--set ap needs --r");
    return make_ap(BigInt(o.q.value_or(0)), BigInt(*o.r));
  }
  if (o.set == "file") {
    if (!o.file) throw UsageError("--set file needs --file");
    return make_file_set(*o.file);
  }
  throw UsageError("unknown set " + o.set);
}

void emit_record(std::ostream& out, const std::string& format,
                 const LengthRecord& rec) {
  if (format == "jsonl") {
    out << record_to_json(rec).dump() << '\n';
  } else if (format == "csv") {
    out << record_to_csv(rec) << '\n';
  } else {
    out << to_decimal(rec.length) << '\n';
  }
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.count.has_value() == o.n_max.has_value()) {
    throw UsageError("gen needs exactly one of --count or --n-max");
  }
  auto set = build_set(o);
  if (o.n_max && o.set != "pi" && o.set != "pi-bar") {
    throw UsageError("--n-max applies only to pi and pi-bar");
  }
  if (o.format == "csv") out << "n,j,length\n";
  if (o.count) {
    for (std::uint64_t i = 0; i < *o.count; ++i) {
      auto rec = set->next();
      if (!rec) break;
      emit_record(out, o.format, *rec);
    }
  } else {
    for (;;) {
      auto rec = set->next();
      if (rec->index->n > *o.n_max) break;
      emit_record(out, o.format, *rec);
    }
  }
  return kExitOk;
}

Json step_json(const RatioStep& s) {
  return Json{{"from", {{"j", s.from.j}, {"n", s.from.n}}},
              {"to", {{"j", s.to.j}, {"n", s.to.n}}},
              {"ratio", s.ratio.to_string()}};
}

int cmd_check_growth(const Options& o, std::ostream& out) {
  if (!o.count) throw UsageError("check growth needs --count");
  const RationalBound c = require_c(o);
  auto set = build_set(o);
  const auto report =
      check_growth(*set, parse_growth_mode(o.mode), c, *o.count);
  Json witness = nullptr;
  if (report.witness) {
    witness = Json{{"index", report.witness->index},
                   {"length", to_decimal(report.witness->length)},
                   {"successor_length",
                    to_decimal(report.witness->successor_length)}};
  }
  out << Json{{"check", "growth"},
              {"set", set->descriptor()},
              {"mode", to_string(report.mode)},
              {"c", report.c.to_string()},
              {"checked_count", report.checked_count},
              {"ok", report.ok},
              {"witness", witness}}
             .dump()
      << '\n';
  return report.ok ? kExitOk : kExitViolation;
}

int cmd_check_divisibility(const Options& o, std::ostream& out) {
  if (!o.n_max) throw UsageError("check divisibility needs --n-max");
  const Params p = require_params(o);
  const auto report = check_divisibility(p, *o.n_max);
  Json counterexample = nullptr;
  if (report.counterexample) {
    counterexample =
        Json{{"j", report.counterexample->j}, {"n", report.counterexample->n}};
  }
  out << Json{{"check", "divisibility"},
              {"params", params_to_json(p)},
              {"n_max", *o.n_max},
              {"checked", report.checked},
              {"ok", report.ok()},
              {"counterexample", counterexample}}
             .dump()
      << '\n';
  return report.ok() ? kExitOk : kExitViolation;
}

int cmd_check_ratio(const Options& o, std::ostream& out) {
  if (!o.count) throw UsageError("check ratio needs --count");
  const Params p = require_params(o);
  const auto report = check_ratio_bounds(p, *o.count);
  Json equalities = Json::array();
  for (const auto& s : report.lower_bound_equalities) {
    equalities.push_back(step_json(s));
  }
  Json skipped = Json::array();
  for (const auto& s : report.skipped) skipped.push_back(step_json(s));
  out << Json{{"check", "ratio"},
              {"params", params_to_json(p)},
              {"steps", report.steps},
              {"within_n", report.within_n},
              {"cross_n", report.cross_n},
              {"lower_bound_equalities", equalities},
              {"skipped", skipped},
              {"ok", report.ok()},
              {"violation", report.violation ? step_json(*report.violation)
                                             : Json(nullptr)}}
             .dump()
      << '\n';
  return report.ok() ? kExitOk : kExitViolation;
}

int cmd_dissect(const Options& o, std::ostream& out) {
  const Params p = require_params(o);
  if (o.dfa_path.has_value() == o.r.has_value()) {
    throw UsageError("dissect needs exactly one of --dfa or --r");
  }
  if (o.q && !o.r) throw UsageError("--q needs --r");
  const UnaryDfa d =
      o.dfa_path ? load_dfa(*o.dfa_path) : ap_dfa(o.q.value_or(0), *o.r);
  const auto verdict = dissect_verdict(p, d);
  Json cert = certificate_json(verdict);
  bool consistent = true;
  if (o.cross_check) {
    consistent = cross_check(verdict, *o.cross_check);
    cert["cross_check"] = consistent;
  }
  out << cert.dump() << '\n';
  return consistent ? kExitOk : kExitViolation;
}

int cmd_suggest(const Options& o, std::ostream& out) {
  out << params_to_json(suggest_params(require_c(o))).dump() << '\n';
  return kExitOk;
}

int cmd_dfa(const Options& o, bool decompose, std::ostream& out) {
  if (!o.dfa_path) throw UsageError("--dfa is required");
  const UnaryDfa d = load_dfa(*o.dfa_path);
  if (decompose) {
    out << decomposition_to_json(decompose_reg1(d)).dump() << '\n';
  } else {
    out << dfa_to_json(d).dump() << '\n';
  }
  return kExitOk;
}

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--alpha", o.alpha, "alpha >= 1");
  cmd->add_option("--beta", o.beta, "beta > alpha");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Construct and certify the geometrically growing unary language Pi",
               "geodissect"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Enumerate a length set");
  add_params(gen, o);
  gen->add_option("--count", o.count, "number of elements");
  gen->add_option("--n-max", o.n_max, "emit all elements with n <= N");
  gen->add_option("--format", o.format, "jsonl|csv|plain")
      ->check(CLI::IsMember({"jsonl", "csv", "plain"}));
  gen->add_option("--set", o.set, "pi|pi-bar|factorial|ap")
      ->check(CLI::IsMember({"pi", "pi-bar", "factorial", "ap"}));
  gen->add_option("--c", o.c, "growth constant p/q for pi-bar");
  gen->add_option("--q", o.q);
  gen->add_option("--r", o.r);

  auto* check = app.add_subcommand("check", "Verify a property");
  check->require_subcommand(1);
  auto* growth = check->add_subcommand("growth", "c-growth of consecutive lengths");
  add_params(growth, o);
  growth->add_option("--c", o.c, "growth constant p/q");
  growth->add_option("--count", o.count, "number of elements");
  growth->add_option("--mode", o.mode, "geometric|constant")
      ->check(CLI::IsMember({"geometric", "constant"}));
  growth->add_option("--set", o.set, "pi|pi-bar|factorial|ap|file")
      ->check(CLI::IsMember({"pi", "pi-bar", "factorial", "ap", "file"}));
  growth->add_option("--q", o.q);
  growth->add_option("--r", o.r);
  growth->add_option("--file", o.file, "one increasing decimal per line");
  auto* divisibility =
      check->add_subcommand("divisibility", "phi(j,n) mod omega(n) == 0");
  add_params(divisibility, o);
  divisibility->add_option("--n-max", o.n_max);
  auto* ratio = check->add_subcommand("ratio", "successor ratio bounds");
  add_params(ratio, o);
  ratio->add_option("--count", o.count, "successor steps");

  auto* dissect = app.add_subcommand("dissect", "Certify non-dissection of Pi");
  add_params(dissect, o);
  dissect->add_option("--dfa", o.dfa_path, "DFA JSON file");
  dissect->add_option("--q", o.q);
  dissect->add_option("--r", o.r);
  dissect->add_option("--cross-check", o.cross_check,
                      "compare against the first K elements");

  auto* suggest = app.add_subcommand("suggest", "Params with beta/alpha < c");
  suggest->add_option("--c", o.c, "p/q > 1");

  auto* dfa = app.add_subcommand("dfa", "Unary DFA utilities");
  dfa->require_subcommand(1);
  auto* normalize = dfa->add_subcommand("normalize", "Print tail+cycle form");
  normalize->add_option("--dfa", o.dfa_path)->required();
  auto* decompose = dfa->add_subcommand("decompose", "Split into q + i*r components");
  decompose->add_option("--dfa", o.dfa_path)->required();

  std::vector<const char*> argv{"geodissect"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*growth) return cmd_check_growth(o, out);
    if (*divisibility) return cmd_check_divisibility(o, out);
    if (*ratio) return cmd_check_ratio(o, out);
    if (*dissect) return cmd_dissect(o, out);
    if (*suggest) return cmd_suggest(o, out);
    if (*normalize) return cmd_dfa(o, false, out);
    if (*decompose) return cmd_dfa(o, true, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "integrity violation: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace geodissect
