#include "imp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

#include "imp/assertions.hpp"
#include "imp/hoare.hpp"
#include "imp/interval.hpp"
#include "imp/parse.hpp"
#include "imp/pretty.hpp"

namespace imp::cli {

namespace {

using nlohmann::json;

class Report {
 public:
  Report(Format format, std::ostream& out) : format_(format), out_(out) {}

  bool json_mode() const { return format_ == Format::Json; }
  json& doc() { return doc_; }

  void line(const std::string& text) {
    if (!json_mode()) out_ << text << '\n';
  }

  int finish(const std::string& status, int code) {
    if (json_mode()) {
      doc_["status"] = status;
      out_ << doc_.dump(2) << '\n';
    }
    return code;
  }

 private:
  Format format_;
  std::ostream& out_;
  json doc_ = json::object();
};

void warn_unbound(const PredEnv& m, const std::vector<Assert>& assertions, std::ostream& err) {
  std::vector<Ident> seen;
  for (const auto& a : assertions) {
    for (const auto& name : unbound_predicates(m, a)) {
      if (std::find(seen.begin(), seen.end(), name) != seen.end()) continue;
      seen.push_back(name);
      err << "warning: predicate '" << name << "' is not defined; treating it as true\n";
    }
  }
}

void collect_assertions(const AInstr& i, std::vector<Assert>& out) {
  std::visit(Overloaded{
                 [&](const Prec& p) {
                   out.push_back(p.assertion);
                   collect_assertions(p.body, out);
                 },
                 [](const ASkip&) {},
                 [](const AAssign&) {},
                 [&](const ASeq& s) {
                   collect_assertions(s.first, out);
                   collect_assertions(s.second, out);
                 },
                 [&](const AWhile& w) {
                   out.push_back(w.invariant);
                   collect_assertions(w.body, out);
                 },
             },
             i.node());
}

std::vector<Ident> condition_variables(const std::vector<Condition>& conds) {
  std::vector<Ident> vars;
  for (const auto& c : conds) {
    for (auto& v : variables(c)) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(std::move(v));
    }
  }
  return vars;
}

/// Lists the conditions and samples each one. Returns whether any was refuted.
bool report_conditions(const std::vector<Condition>& conds, std::size_t samples, Report& rep) {
  const PredEnv& m = builtin_pred_env();
  SampleSpec spec;
  spec.random_count = samples;
  const std::vector<Valuation> grid = structured_samples(condition_variables(conds), spec);

  json listed = json::array();
  json refuted = json::array();
  for (std::size_t k = 0; k < conds.size(); ++k) {
    rep.line("condition " + std::to_string(k + 1) + ": " + pretty(conds[k]));
    listed.push_back({{"hyp", pretty(conds[k].hyp)}, {"concl", pretty(conds[k].concl)}});
  }
  for (std::size_t k = 0; k < conds.size(); ++k) {
    SampledVerdict v = valid_sampled(m, conds[k], grid);
    if (!v.refuted()) continue;
    std::string valuation = format_valuation(*v.counterexample);
    rep.line("counterexample to condition " + std::to_string(k + 1) + ": " + valuation);
    refuted.push_back({{"condition", k + 1}, {"valuation", valuation}});
  }
  if (refuted.empty()) rep.line("no counterexamples");
  rep.doc()["conditions"] = std::move(listed);
  if (!refuted.empty()) rep.doc()["counterexample"] = refuted;
  return !refuted.empty();
}

json error_json(const RuntimeError& e) {
  return {{"kind", e.kind == ErrorKind::UnboundRead ? "unbound_read" : "unbound_write"},
          {"name", e.name},
          {"at", to_string(e.at)}};
}

std::string error_text(const RuntimeError& e) {
  return std::string("error: ") +
         (e.kind == ErrorKind::UnboundRead ? "read of unbound variable '"
                                           : "assignment to unbound variable '") +
         e.name + "' at " + to_string(e.at);
}

/// Reports an execution outcome; returns its exit status and status word.
std::pair<int, std::string> report_outcome(const ExecOutcome& outcome, Report& rep) {
  return std::visit(Overloaded{
                        [&](const Done& d) -> std::pair<int, std::string> {
                          rep.line(format_env(d.env));
                          rep.doc()["env"] = format_env(d.env);
                          return {kOk, "done"};
                        },
                        [&](const RuntimeError& e) -> std::pair<int, std::string> {
                          rep.line(error_text(e));
                          rep.doc()["error"] = error_json(e);
                          return {kRuntimeError, "error"};
                        },
                        [&](const OutOfFuel&) -> std::pair<int, std::string> {
                          rep.line("out of fuel");
                          return {kOutOfFuel, "out_of_fuel"};
                        },
                    },
                    outcome);
}

}  // namespace

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Instr program = parse_bare(cfg.program);
  const Env env = parse_env(cfg.env);
  Report rep(cfg.format, out);
  auto [code, status] = report_outcome(exec_fuel(cfg.fuel, env, program), rep);
  return rep.finish(status, code);
}

int cmd_vcg(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const AInstr program = parse_instr(cfg.program);
  const Assert post = cfg.post ? parse_assert(*cfg.post) : true_assert();

  std::vector<Assert> used{post};
  collect_assertions(program, used);
  warn_unbound(builtin_pred_env(), used, err);

  Report rep(cfg.format, out);
  const Assert pre = pc(program, post);
  rep.line("pc: " + pretty(pre));
  rep.doc()["pc"] = pretty(pre);
  const bool refuted = report_conditions(vcg(program, post), cfg.samples, rep);
  return refuted ? rep.finish("counterexample", kCounterexample) : rep.finish("valid", kOk);
}

int cmd_absint(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Instr program = parse_bare(cfg.program);
  auto [initial, defaulted] = IntervalAnalyzer::initial_env(program, parse_interval_env(cfg.abenv));
  for (const auto& name : defaulted) {
    err << "warning: variable '" << name << "' has no abstract value; using top\n";
  }

  const IntervalAnalyzer::Result result = IntervalAnalyzer::analyze(program, initial);
  const Assert final_assert = IntervalAnalyzer::to_a_opt(result.env);

  Report rep(cfg.format, out);
  rep.line(pretty(result.annotated));
  rep.line("final: " + pretty(final_assert));
  rep.doc()["annotated"] = pretty(result.annotated);
  rep.doc()["final"] = pretty(final_assert);
  rep.doc()["env"] = result.env ? json(format_interval_env(*result.env)) : json(nullptr);

  if (!cfg.verify) return rep.finish("analysed", kOk);
  const bool refuted = report_conditions(vcg(result.annotated, final_assert), cfg.samples, rep);
  return refuted ? rep.finish("counterexample", kCounterexample) : rep.finish("verified", kOk);
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const AInstr program = parse_instr(cfg.program);
  const Env env = parse_env(cfg.env);

  std::vector<Assert> used;
  collect_assertions(program, used);
  warn_unbound(builtin_pred_env(), used, err);

  AnnotatedRun run = exec_annotated(cfg.fuel, builtin_pred_env(), Valuation{}, env, program);
  Report rep(cfg.format, out);
  auto [code, status] = report_outcome(run.outcome, rep);

  json violations = json::array();
  for (const auto& v : run.violations) {
    rep.line("violation at " + to_string(v.at) + ": " + pretty(v.assertion) + " fails with " +
             format_env(v.env));
    violations.push_back(
        {{"at", to_string(v.at)}, {"assertion", pretty(v.assertion)}, {"env", format_env(v.env)}});
  }
  rep.doc()["violations"] = violations;
  if (!run.violations.empty()) return rep.finish("violation", kCounterexample);
  return rep.finish(status, code);
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Run: return cmd_run(cfg, out, err);
      case Command::Vcg: return cmd_vcg(cfg, out, err);
      case Command::Absint: return cmd_absint(cfg, out, err);
      case Command::Check: return cmd_check(cfg, out, err);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

namespace {

std::optional<std::string> read_program(const std::string& source, std::istream& in,
                                        std::ostream& err) {
  std::ostringstream text;
  if (source == "-") {
    text << in.rdbuf();
    return text.str();
  }
  std::ifstream file(source);
  if (!file) {
    err << "error: cannot open '" << source << "'\n";
    return std::nullopt;
  }
  text << file.rdbuf();
  return text.str();
}

}  // namespace

int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Interpreter, verification condition generator and interval analyser"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string source;
  std::string format = "text";
  std::optional<std::string> post;

  struct Entry {
    Command command;
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {Command::Run, "run", "execute a bare program"},
      {Command::Vcg, "vcg", "generate and sample verification conditions"},
      {Command::Absint, "absint", "annotate a bare program with interval invariants"},
      {Command::Check, "check", "run an annotated program, checking its annotations"},
  };
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("--env", cfg.env, "initial environment, e.g. x=0,n=3");
    sub->add_option("--abenv", cfg.abenv, "initial abstract environment, e.g. x=[0,0]");
    sub->add_option("--post", post, "postcondition (default 0 < 1)");
    sub->add_option("--fuel", cfg.fuel, "unfoldings allowed per loop entry")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "random valuations per condition")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_flag("--verify", cfg.verify, "absint: check the result with vcg");
    sub->add_option("program", source, "program file, or - for stdin")->required();
    sub->final_callback([&cfg, command = e.command] { cfg.command = command; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  auto text = read_program(source, in, err);
  if (!text) return kUsage;
  cfg.program = std::move(*text);
  cfg.post = post;
  cfg.format = format == "json" ? Format::Json : Format::Text;
  return execute(cfg, out, err);
}

}  // namespace imp::cli
