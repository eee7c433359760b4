// mscodes: command-line front end for multiset codes on permutation channels.
//
// Exit codes: 0 success/PASS, 1 assertion failure or counterexample,
// 2 usage or input error, 3 work budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mscodes/codebook.hpp"
#include "mscodes/constructions.hpp"
#include "mscodes/errors.hpp"
#include "mscodes/harness.hpp"
#include "mscodes/version.hpp"

namespace {

using namespace mscodes;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CommonOptions {
  std::uint64_t seed = 1;
  std::uint64_t budget = 100'000'000;
  std::string output;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--seed", common.seed, "Master RNG seed")
      ->envname("MSCODES_SEED")
      ->capture_default_str();
  cmd->add_option("--budget", common.budget, "Work budget (enumerated outcomes or points)")
      ->envname("MSCODES_BUDGET")
      ->capture_default_str();
  cmd->add_option("--output,-o", common.output, "Output file");
}

/// Writes `text` to `path`, or to stdout when the path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_examples() {
  return harness::run_examples(harness::worked_examples(), std::cout) ? kExitOk : kExitAssertion;
}

struct SimulateArgs {
  std::string config_file;
  std::string codebook;
  std::string channel;
  std::uint64_t trials = 0;
  std::string decoder;
  unsigned threads = 0;
};

int cmd_simulate(const SimulateArgs& args, const CommonOptions& common, CLI::App* cmd) {
  harness::ExperimentConfig cfg;
  if (!args.config_file.empty()) cfg = harness::ExperimentConfig::parse(read_file(args.config_file));
  if (!args.codebook.empty()) cfg.codebook = args.codebook;
  if (!args.channel.empty()) cfg.channel = ChannelSpec::parse(args.channel);
  if (args.trials != 0) cfg.trials = args.trials;
  if (!args.decoder.empty()) {
    cfg.decoder = args.decoder == "structured" ? harness::DecoderKind::structured
                                               : harness::DecoderKind::min_distance;
  }
  if (args.threads != 0) cfg.threads = args.threads;
  // Command-line and environment values win over the config file.
  if (cmd->count("--seed") > 0 || std::getenv("MSCODES_SEED") || args.config_file.empty()) {
    cfg.seed = RngSeed{common.seed};
  }
  if (!common.output.empty()) cfg.output = common.output;

  const auto report = harness::run_simulation(cfg);
  std::cout << harness::to_json(report, cfg) << '\n';
  return kExitOk;
}

int cmd_enumerate(std::uint32_t q, std::uint32_t ell, const CommonOptions& common) {
  const auto c = harness::enumerate_counts(q, ell, common.budget);
  std::ostringstream out;
  out << "q=" << c.q << " ell=" << c.ell << '\n'
      << "|P(S,ell)| formula=" << c.subsets_formula << " enumerated=" << c.subsets_enumerated << '\n'
      << "|M(S,ell)| formula=" << c.multisets_formula << " enumerated=" << c.multisets_enumerated
      << '\n';
  bool ok = c.counts_agree();
  out << "counts " << (ok ? "agree" : "DISAGREE") << '\n';
  if (c.inequality_applies()) {
    out << "|M| > |P|: " << (c.inequality_holds() ? "holds" : "VIOLATED") << '\n';
    ok = ok && c.inequality_holds();
  }
  emit(common.output, out.str());
  return ok ? kExitOk : kExitAssertion;
}

int cmd_search(std::uint32_t q, std::uint32_t ell, std::uint64_t d, const std::string& strategy,
               const CommonOptions& common) {
  harness::SearchOptions options;
  options.budget = common.budget;
  const auto code = harness::search_code(
      q, ell, d,
      strategy == "exhaustive" ? harness::SearchStrategy::exhaustive
                               : harness::SearchStrategy::greedy,
      options);
  if (!code) {
    std::cerr << "no valid codebook: fewer than 2 points on the q=" << q << " ell=" << ell
              << " sphere are pairwise at distance >= " << d << '\n';
    return kExitAssertion;
  }
  const auto found = min_distance(*code);
  std::ostringstream out;
  write_codebook(out, *code);
  emit(common.output, out.str());
  std::cerr << "found " << code->size() << " codewords, min distance " << found << '\n';
  return found >= d ? kExitOk : kExitAssertion;
}

int cmd_verify(const std::string& file, const ErrorPattern& max_pattern, unsigned threads,
               const CommonOptions& common) {
  const auto code = read_codebook_file(file);
  VerifyOptions options;
  options.budget = common.budget;
  options.threads = threads;
  const auto report = verify_theorem1(code, max_pattern, options);
  emit(common.output, to_json(report) + "\n");
  if (report.declared_mismatch()) {
    std::cerr << "warning: file declares d=" << *report.declared_d_min << " but computed d_min is "
              << report.d_min << "; verification used the computed value\n";
  }
  std::cerr << (report.passed() ? "PASS" : "FAIL") << " " << report.checked_outcomes
            << " outcomes checked, " << report.premise_satisfied_outcomes
            << " inside the guaranteed regime, " << report.failure_count << " failures\n";
  return report.passed() ? kExitOk : kExitAssertion;
}

int cmd_construct(const std::string& kind, const std::string& inner_spec,
                  const CommonOptions& common) {
  const auto inner = harness::resolve_inner_code(inner_spec);
  const auto code = kind == "multiset" ? multiset_construct(inner) : subset_construct(inner);
  std::ostringstream out;
  out << "# " << kind << " construction over inner code " << inner.name() << " (q="
      << inner.alphabet_size() << ", length=" << inner.length() << ")\n"
      << "# tag encoding: symbol = (seq - 1) * " << inner.alphabet_size() << " + payload, payload 1-based\n";
  write_codebook(out, code);
  emit(common.output, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiset codes for permutation channels"};
  app.set_version_flag("--version", std::string(mscodes::kVersion));
  app.require_subcommand(1);

  CommonOptions common;

  auto* examples = app.add_subcommand("examples", "Recompute the worked examples");
  add_common(examples, common);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo decoding experiment");
  add_common(simulate, common);
  simulate->add_option("--config", sim.config_file, "Flat key=value config file")
      ->check(CLI::ExistingFile);
  simulate->add_option("--codebook", sim.codebook,
                       "Codebook file, or subset:<inner> / multiset:<inner>");
  simulate->add_option("--channel", sim.channel,
                       "Channel spec, e.g. \"mode=exact s=0 rho=2 t=0\"");
  simulate->add_option("--trials", sim.trials, "Number of trials")->check(CLI::PositiveNumber);
  simulate->add_option("--decoder", sim.decoder, "min_distance or structured")
      ->check(CLI::IsMember({"min_distance", "structured"}));
  simulate->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");

  std::uint32_t enum_q = 0, enum_ell = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Count subsets and multisets of cardinality ell");
  add_common(enumerate, common);
  enumerate->add_option("--q,-q", enum_q, "Alphabet size")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--ell,-l", enum_ell, "Cardinality")->required();

  std::uint32_t search_q = 0, search_ell = 0;
  std::uint64_t search_d = 0;
  std::string strategy = "greedy";
  auto* search = app.add_subcommand("search", "Constant-cardinality code search on the sphere");
  add_common(search, common);
  search->add_option("--q,-q", search_q, "Alphabet size")->required()->check(CLI::PositiveNumber);
  search->add_option("--ell,-l", search_ell, "Codeword cardinality")->required();
  search->add_option("--d,-d", search_d, "Required minimum distance")->required();
  search->add_option("--strategy", strategy, "greedy or exhaustive")
      ->check(CLI::IsMember({"greedy", "exhaustive"}))
      ->capture_default_str();

  std::string verify_file;
  mscodes::ErrorPattern max_pattern;
  unsigned verify_threads = 0;
  auto* verify = app.add_subcommand("verify", "Exhaustively check the correction guarantee");
  add_common(verify, common);
  verify->add_option("codebook", verify_file, "Codebook file")->required()->check(CLI::ExistingFile);
  verify->add_option("--s", max_pattern.insertions, "Max insertions")->capture_default_str();
  verify->add_option("--rho", max_pattern.deletions, "Max deletions")->capture_default_str();
  verify->add_option("--t", max_pattern.substitutions, "Max substitutions")->capture_default_str();
  verify->add_option("--threads", verify_threads, "Worker threads (0 = all cores)");

  std::string kind = "subset";
  std::string inner = "hamming74";
  auto* construct = app.add_subcommand("construct", "Emit a sequence-number construction");
  add_common(construct, common);
  construct->add_option("--kind", kind, "subset or multiset")
      ->check(CLI::IsMember({"subset", "multiset"}))
      ->capture_default_str();
  construct->add_option("--inner", inner, "hamming74, repetition:<q>:<len> or file:<path>")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*examples) return cmd_examples();
    if (*simulate) return cmd_simulate(sim, common, simulate);
    if (*enumerate) return cmd_enumerate(enum_q, enum_ell, common);
    if (*search) return cmd_search(search_q, search_ell, search_d, strategy, common);
    if (*verify) return cmd_verify(verify_file, max_pattern, verify_threads, common);
    if (*construct) return cmd_construct(kind, inner, common);
  } catch (const mscodes::ResourceError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
