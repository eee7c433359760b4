#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mscodes/channel.hpp"
#include "mscodes/codebook.hpp"
#include "mscodes/constructions.hpp"
#include "mscodes/isomorphisms.hpp"
#include "mscodes/random.hpp"

namespace mscodes::harness {

// ---------------------------------------------------------------------------
// Worked examples
// ---------------------------------------------------------------------------

struct ExampleCheck {
  std::string name;
  std::string expected;
  std::function<std::string()> compute;
};

/// The worked examples for subsets, multiset operations and run numbering,
/// each rendered as text so a mismatch prints as a readable diff.
std::vector<ExampleCheck> worked_examples();

/// Prints `PASS <name>` or `FAIL <name>: expected <x>, got <y>` per check.
/// Returns true iff every check passed.
bool run_examples(const std::vector<ExampleCheck>& checks, std::ostream& out);

// ---------------------------------------------------------------------------
// Code sources
// ---------------------------------------------------------------------------

enum class Construction { none, subset, multiset };

/// A codebook plus, for the sequence-number constructions, the inner code
/// that enables structured decoding.
struct CodeSource {
  std::string description;
  Codebook codebook;
  Construction construction = Construction::none;
  std::optional<ClassicalCode> inner;
};

/// Inner code by name: `hamming74`, `repetition:<q>:<len>`, or `file:<path>`.
ClassicalCode resolve_inner_code(const std::string& spec);

/// `subset:<inner>` or `multiset:<inner>` builds a construction; anything
/// else is read as a codebook file path.
CodeSource resolve_code_source(const std::string& spec);

// ---------------------------------------------------------------------------
// Monte Carlo simulation
// ---------------------------------------------------------------------------

enum class DecoderKind { min_distance, structured };

struct ExperimentConfig {
  std::string codebook = "subset:hamming74";
  ChannelSpec channel;
  std::uint64_t trials = 1000;
  RngSeed seed{1};
  std::string output;  ///< CSV path; empty writes nothing
  DecoderKind decoder = DecoderKind::min_distance;
  unsigned threads = 0;

  /// Throws DomainError on zero trials.
  void validate() const;
  /// Flat key=value block: codebook, trials, seed, decoder and the channel keys.
  std::string to_string() const;
  /// Reads the same keys; absent keys keep their defaults.
  static ExperimentConfig parse(std::string_view text);
};

enum class TrialOutcome { success, failure, ambiguous };
const char* to_string(TrialOutcome outcome);

struct TrialRow {
  std::uint64_t trial = 0;
  std::size_t codeword_index = 0;
  ErrorPattern effective;
  std::uint64_t distance_to_sent = 0;
  /// Decoder output; -1 when the structured decoder reports failure.
  std::int64_t decoded_index = -1;
  TrialOutcome outcome = TrialOutcome::success;
};

struct TrialReport {
  std::uint64_t trials = 0;
  std::uint64_t decode_successes = 0;
  std::uint64_t decode_failures = 0;
  std::uint64_t ambiguous_decodes = 0;
  double error_rate = 0.0;  ///< (failures + ambiguous) / trials
  double mean_insertions = 0.0;
  double mean_deletions = 0.0;
  double mean_substitutions = 0.0;
  double elapsed_seconds = 0.0;
};

/// Runs the trials of `cfg` against an already-resolved code. Trial i draws
/// everything from an engine seeded with derive_seed(cfg.seed, i), so rows
/// are identical for any thread count.
TrialReport simulate(const ExperimentConfig& cfg, const CodeSource& source,
                     std::vector<TrialRow>* rows = nullptr);

/// Resolves the code, runs the trials and writes the CSV when cfg.output is set.
TrialReport run_simulation(const ExperimentConfig& cfg);

/// CSV with `#` provenance lines (version, config), the header
/// `trial,codeword_index,s_eff,rho_eff,t_eff,distance_to_sent,decoded_index,outcome`,
/// one row per trial and `#` summary lines. Timing is left out so reruns
/// reproduce the file byte for byte.
void write_trial_csv(std::ostream& out, const ExperimentConfig& cfg, const CodeSource& source,
                     const std::vector<TrialRow>& rows, const TrialReport& report);

std::string to_json(const TrialReport& report, const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// Enumeration and search on the constant-sum sphere
// ---------------------------------------------------------------------------

struct EnumerationCounts {
  std::uint32_t q = 0;
  std::uint32_t ell = 0;
  std::uint64_t subsets_formula = 0;       ///< C(q, ell)
  std::uint64_t subsets_enumerated = 0;    ///< sphere points with every entry <= 1
  std::uint64_t multisets_formula = 0;     ///< C(q + ell - 1, ell)
  std::uint64_t multisets_enumerated = 0;  ///< sphere points

  bool counts_agree() const noexcept {
    return subsets_formula == subsets_enumerated && multisets_formula == multisets_enumerated;
  }
  /// The strict inequality |M| > |P| is claimed for q, ell >= 2 only.
  bool inequality_applies() const noexcept { return q >= 2 && ell >= 2; }
  bool inequality_holds() const noexcept { return multisets_enumerated > subsets_enumerated; }
};

/// Throws ResourceError when C(q + ell - 1, ell) exceeds `budget`.
EnumerationCounts enumerate_counts(std::uint32_t q, std::uint32_t ell, std::uint64_t budget);

enum class SearchStrategy { greedy, exhaustive };

struct SearchOptions {
  std::uint64_t budget = 100'000'000;
  /// Largest sphere exhaustive search accepts.
  std::uint64_t exhaustive_limit = 64;
};

/// Constant-cardinality code with Manhattan distance >= d on the sphere of
/// sum ell in Z_{>=0}^q. Greedy admits points in lexicographic order;
/// exhaustive returns the lexicographically first maximum-size code.
/// Returns the admitted points, which may number fewer than 2.
std::vector<IntegerVector> search_sphere_code(std::uint32_t q, std::uint32_t ell, std::uint64_t d,
                                              SearchStrategy strategy,
                                              const SearchOptions& options = {});

/// Search result as a Codebook; nullopt when fewer than 2 points qualify.
std::optional<Codebook> search_code(std::uint32_t q, std::uint32_t ell, std::uint64_t d,
                                    SearchStrategy strategy, const SearchOptions& options = {});

}  // namespace mscodes::harness
