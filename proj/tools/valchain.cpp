// valchain: evaluate, convert, validate and classify MacLane-Vaquié chains and
// ABKP sequences over Q with a p-adic valuation.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "valchain/chains.hpp"
#include "valchain/io.hpp"
#include "valchain/report.hpp"
#include "valchain/scenarios.hpp"

using namespace valchain;

namespace {

enum Exit { kOk = 0, kFailure = 1, kInputError = 2 };

struct Options {
  std::size_t depth = 8;
  std::optional<std::size_t> window;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string chain_path;
  std::string sequence_path;
  std::string poly;
  std::string q;
  std::string to;
  std::vector<std::string> candidates;
  std::string demo;
};

ContinuousFamily rewindowed(const ContinuousFamily& f, const Options& o) {
  return o.window ? f.with_window(*o.window) : f;
}

MLVChain apply_window(const MLVChain& chain, const Options& o) {
  if (!o.window || chain.is_infinite()) return chain;
  const InductiveValuation& w = chain.chain();
  std::vector<Step> steps;
  for (const auto& s : w.steps()) {
    if (const auto* l = std::get_if<LimitStep>(&s))
      steps.emplace_back(LimitStep{rewindowed(l->family, o), l->phi, l->gamma});
    else if (const auto* st = std::get_if<StableLimitStep>(&s))
      steps.emplace_back(StableLimitStep{rewindowed(st->family, o)});
    else
      steps.push_back(s);
  }
  return MLVChain(InductiveValuation(w.field(), w.seed(), std::move(steps)));
}

ABKPSequence apply_window(const ABKPSequence& seq, const Options& o) {
  if (!o.window || seq.generator()) return seq;
  std::vector<Block> blocks = seq.blocks();
  for (auto& b : blocks)
    if (b.tail) b.tail = rewindowed(*b.tail, o);
  return ABKPSequence(seq.field(), std::move(blocks), seq.shape());
}

MLVChain load_chain(const Options& o) { return apply_window(read_chain_file(o.chain_path), o); }
ABKPSequence load_sequence(const Options& o) { return apply_window(read_sequence_file(o.sequence_path), o); }

Poly parse_arg(const std::string& text, const std::string& flag) {
  try {
    return Poly::parse(text);
  } catch (const std::exception& e) {
    throw InputError(flag, e.what());
  }
}

int emit(const Options& o, const std::string& command, const std::string& text, Json result) {
  if (o.format == "structured")
    std::cout << report_envelope(command, std::move(result)).dump(2) << "\n";
  else
    std::cout << text;
  return kOk;
}

int emit_report(const Options& o, const std::string& command, const ValidationReport& report) {
  emit(o, command, join_lines(report_lines(report)), to_json(report));
  return report.passed() ? kOk : kFailure;
}

int run_eval(const Options& o) {
  const Poly f = parse_arg(o.poly, "--poly");
  GroupValue v;
  if (!o.chain_path.empty())
    v = load_chain(o).prefix(o.depth)(f);
  else
    v = eval_sequence(load_sequence(o), f, o.depth);
  return emit(o, "eval", v.str() + "\n", Json{{"poly", f.str()}, {"value", v.str()}});
}

int run_truncate(const Options& o) {
  const Poly f = parse_arg(o.poly, "--poly");
  const Poly q = parse_arg(o.q, "--q");
  if (!q.is_monic() || q.degree() < 1) throw InputError("--q", "Q must be monic of positive degree");
  const InductiveValuation w = load_chain(o).prefix(o.depth);
  const GroupValue v = truncate(w, q, f);
  return emit(o, "truncate", v.str() + "\n", Json{{"poly", f.str()}, {"Q", q.str()}, {"value", v.str()}});
}

std::vector<Poly> candidate_polys(const Options& o) {
  std::vector<Poly> out;
  for (const auto& c : o.candidates) out.push_back(parse_arg(c, "--candidate"));
  return out;
}

int run_convert(const Options& o) {
  const ValidationOptions vo{40, 6, o.seed};
  try {
    Json out;
    if (o.to == "sequence") {
      if (o.chain_path.empty()) throw InputError("--to", "converting to a sequence needs --chain");
      out = to_json(mlv_to_abkp(load_chain(o), o.depth, candidate_polys(o), vo));
    } else {
      if (o.sequence_path.empty()) throw InputError("--to", "converting to a chain needs --sequence");
      out = to_json(abkp_to_mlv(load_sequence(o), o.depth, vo));
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
  } catch (const ConversionError& e) {
    std::cerr << "error: " << e.what() << "\n" << join_lines(report_lines(e.report()));
    return kFailure;
  }
}

int run_validate(const Options& o) {
  const ValidationOptions vo{40, 6, o.seed};
  if (!o.chain_path.empty()) return emit_report(o, "validate", validate_chain(load_chain(o), o.depth, candidate_polys(o), vo));
  return emit_report(o, "validate", validate_sequence(load_sequence(o), o.depth, vo));
}

int run_classify(const Options& o) {
  const ABKPSequence seq = o.chain_path.empty() ? load_sequence(o) : mlv_to_abkp_unchecked(load_chain(o));
  const Classification c = classify(seq, o.depth);
  emit(o, "classify", c.str() + "\n", Json{{"classification", c.str()}, {"shape", to_string(seq.shape())}});
  return c.kind == ExtensionKind::Undetermined ? kFailure : kOk;
}

int run_demo(const Options& o) {
  scenarios::DemoOptions d{o.depth, o.window.value_or(8), o.seed};
  const auto outcome = scenarios::run_demo(o.demo, d);
  std::string text = join_lines(outcome.lines);
  text += outcome.passed() ? "self-checks: pass\n" : "self-checks: FAIL";
  for (const auto& f : outcome.failed_checks) text += " [" + f + "]";
  if (!outcome.passed()) text += "\n";
  emit(o, "demo", text, outcome.structured);
  return outcome.passed() ? kOk : kFailure;
}

void require_one_input(const Options& o, bool chain_only = false) {
  if (!o.chain_path.empty() && !o.sequence_path.empty())
    throw InputError("--chain/--sequence", "give exactly one input file");
  if (o.chain_path.empty() && (chain_only || o.sequence_path.empty()))
    throw InputError(chain_only ? "--chain" : "--chain/--sequence", "missing input file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MacLane-Vaquié chains and abstract key polynomial sequences over (Q, v_p)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  if (const char* env = std::getenv("VALCHAIN_DEPTH")) {
    try {
      o.depth = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "error: VALCHAIN_DEPTH must be a non-negative integer\n";
      return kInputError;
    }
  }
  app.add_option("--depth", o.depth, "inspection depth (default 8, or VALCHAIN_DEPTH)");
  app.add_option("--window", o.window, "stability window for continuous families")->check(CLI::Range(2, 1 << 12));
  app.add_option("--seed", o.seed, "sampling seed");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "structured"}));

  auto inputs = [&](CLI::App* sub) {
    sub->add_option("--chain", o.chain_path, "chain file")->check(CLI::ExistingFile);
    sub->add_option("--sequence", o.sequence_path, "sequence file")->check(CLI::ExistingFile);
  };
  auto* eval = app.add_subcommand("eval", "evaluate w(f)");
  inputs(eval);
  eval->add_option("--poly", o.poly, "polynomial, e.g. \"X^2 + 2\"")->required();
  auto* trunc = app.add_subcommand("truncate", "evaluate the truncation w_Q(f)");
  trunc->add_option("--chain", o.chain_path, "chain file")->check(CLI::ExistingFile)->required();
  trunc->add_option("--q", o.q, "truncating polynomial Q")->required();
  trunc->add_option("--poly", o.poly, "polynomial f")->required();
  auto* convert = app.add_subcommand("convert", "convert between chain and sequence files");
  inputs(convert);
  convert->add_option("--to", o.to, "target representation")->required()->check(CLI::IsMember({"chain", "sequence"}));
  convert->add_option("--candidate", o.candidates, "extra polynomial for degree probes");
  auto* validate = app.add_subcommand("validate", "check the structural axioms");
  inputs(validate);
  validate->add_option("--candidate", o.candidates, "extra polynomial for degree probes");
  auto* cls = app.add_subcommand("classify", "valuation-algebraic or valuation-transcendental");
  inputs(cls);
  auto* demo = app.add_subcommand("demo", "run a built-in scenario");
  demo->add_option("name", o.demo, "two-step | sqrt7 | liouville | tower")
      ->required()
      ->check(CLI::IsMember(scenarios::demo_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*eval) {
      require_one_input(o);
      return run_eval(o);
    }
    if (*trunc) return run_truncate(o);
    if (*convert) {
      require_one_input(o);
      return run_convert(o);
    }
    if (*validate) {
      require_one_input(o);
      return run_validate(o);
    }
    if (*cls) {
      require_one_input(o);
      return run_classify(o);
    }
    return run_demo(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnresolvedStability& e) {
    std::cerr << "unresolved stability: " << e.what() << "\nobserved:";
    for (const auto& v : e.prefix()) std::cerr << " " << v;
    std::cerr << "\n";
    return kFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
