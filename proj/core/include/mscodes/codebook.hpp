#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mscodes/error_pattern.hpp"
#include "mscodes/multiset.hpp"

namespace mscodes {

/// A multiset code: at least two distinct codewords over one alphabet, in a
/// fixed order (the codeword index is the decoder's output).
class Codebook {
 public:
  /// Throws DomainError on fewer than two codewords, a duplicate codeword, or
  /// a codeword over a different alphabet.
  Codebook(Alphabet alphabet, std::vector<Multiset> codewords);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Multiset>& codewords() const noexcept { return codewords_; }
  std::size_t size() const noexcept { return codewords_.size(); }
  const Multiset& operator[](std::size_t i) const { return codewords_[i]; }

  /// Minimum distance recorded alongside the codewords (e.g. in a file
  /// header). Never trusted by the decoder or verifier.
  const std::optional<std::uint64_t>& declared_min_distance() const noexcept { return declared_d_; }
  void set_declared_min_distance(std::optional<std::uint64_t> d) { declared_d_ = d; }

 private:
  Alphabet alphabet_;
  std::vector<Multiset> codewords_;
  std::optional<std::uint64_t> declared_d_;
};

/// [n, k, d; ell] type of a code plus its rate k / (n * ell).
struct CodeParameters {
  double n = 0.0;  ///< log2 |S|
  double k = 0.0;  ///< log2 |C|
  std::uint64_t d_min = 0;
  std::uint64_t ell_max = 0;
  double rate = 0.0;
  std::optional<std::uint64_t> constant_cardinality;
};

/// Exact all-pairs minimum distance.
std::uint64_t min_distance(const Codebook& code);

CodeParameters parameters(const Codebook& code);

struct DecodeResult {
  std::size_t index = 0;
  std::uint64_t distance = 0;
  /// False when two or more codewords attain the minimum; `index` is then the lowest.
  bool unique = true;
};

/// Nearest-codeword search over the whole codebook. Throws DomainError if
/// `received` is over a different alphabet.
DecodeResult decode_min_distance(const Codebook& code, const Multiset& received);

/// Invokes `visit(received)` for every multiset reachable from `sent` by
/// exactly `pattern.deletions` deletions of element instances, then
/// `pattern.substitutions` substitutions of distinct surviving instances by a
/// different symbol, then `pattern.insertions` insertions of arbitrary
/// symbols. Substitutions of equal symbols are generated once per multiset of
/// replacements. Throws DomainError if rho + t exceeds |sent|.
void enumerate_outcomes(const Multiset& sent, const ErrorPattern& pattern,
                        const std::function<void(const Multiset&)>& visit);

/// Number of outcomes enumerate_outcomes would visit, computed without
/// materializing the insertions and substitutions. Saturates at UINT64_MAX.
std::uint64_t count_outcomes(const Multiset& sent, const ErrorPattern& pattern);

struct VerifyFailure {
  std::size_t codeword_index = 0;
  ErrorPattern pattern;
  std::string received;  ///< roster form
  std::size_t decoded_index = 0;
  std::uint64_t distance_to_sent = 0;
  /// "wrong_codeword", "ambiguous", "distance_bound" or "deletion_identity".
  std::string kind;
};

struct VerifyReport {
  std::uint64_t d_min = 0;
  std::optional<std::uint64_t> declared_d_min;
  ErrorPattern max_pattern;
  /// Patterns <= max_pattern that satisfy 2(s + rho + 2t) < d_min.
  std::vector<ErrorPattern> patterns;
  /// Every decoded outcome, clean transmissions included.
  std::uint64_t checked_outcomes = 0;
  /// Outcomes of nonzero patterns inside the guaranteed regime.
  std::uint64_t premise_satisfied_outcomes = 0;
  std::uint64_t failure_count = 0;
  /// First failures in (codeword index, pattern, enumeration) order, capped.
  std::vector<VerifyFailure> failures;
  double elapsed_seconds = 0.0;

  bool passed() const noexcept { return failure_count == 0; }
  bool declared_mismatch() const noexcept { return declared_d_min && *declared_d_min != d_min; }
};

struct VerifyOptions {
  std::uint64_t budget = 100'000'000;
  unsigned threads = 0;  ///< 0 = hardware concurrency
  std::size_t max_reported_failures = 32;
};

/// Exhaustive check of the correction guarantee: for each codeword and each
/// pattern within `max_pattern` inside the guaranteed regime (d_min is
/// recomputed, never taken from the declaration), every reachable outcome
/// must decode uniquely to the sent codeword, respect d(X,Y) <= s + rho + 2t,
/// and for deletion-only patterns have d(X,Y) = rho exactly. Throws
/// ResourceError, carrying the outcome count, if it exceeds `options.budget`.
/// The report does not depend on the thread count.
VerifyReport verify_theorem1(const Codebook& code, const ErrorPattern& max_pattern,
                             const VerifyOptions& options = {});

/// JSON with checked_outcomes, premise_satisfied_outcomes, failures and
/// elapsed, plus d_min, declared_d_min, failure_count and patterns.
std::string to_json(const VerifyReport& report);

/// Text format: a header line `q=<int> count=<int>` (optionally `d=<int>`),
/// then one roster per line. Blank lines and `#` comments are ignored.
Codebook read_codebook(std::istream& in);
Codebook read_codebook_file(const std::string& path);
void write_codebook(std::ostream& out, const Codebook& code, bool include_d = true);
void write_codebook_file(const std::string& path, const Codebook& code, bool include_d = true);

}  // namespace mscodes
