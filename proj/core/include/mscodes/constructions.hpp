#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mscodes/codebook.hpp"
#include "mscodes/multiset.hpp"
#include "mscodes/random.hpp"

namespace mscodes {

/// Symbol of an inner-code alphabet A, 0-based here and 1-based in files.
using InnerSymbol = std::uint32_t;
using InnerWord = std::vector<InnerSymbol>;

/// A classical block code of length ell over an alphabet of q symbols, held as
/// its explicit codeword list. Codeword i carries the information word whose
/// base-q digits spell i (most significant first) when |C| = q^k.
class ClassicalCode {
 public:
  /// Throws DomainError on fewer than 2 codewords, unequal lengths, zero
  /// length, a symbol >= q, or duplicate codewords.
  ClassicalCode(std::uint32_t q, std::vector<InnerWord> codewords, std::string name = "custom");

  std::uint32_t alphabet_size() const noexcept { return q_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return codewords_.size(); }
  const std::vector<InnerWord>& codewords() const noexcept { return codewords_; }
  const InnerWord& operator[](std::size_t i) const { return codewords_[i]; }
  const std::string& name() const noexcept { return name_; }

  /// k = log_q |C|; an integer exactly when |C| is a power of q.
  double dimension() const noexcept;

  /// Digits of `index` in base q, k of them. Throws DomainError unless |C| = q^k.
  std::vector<InnerSymbol> information_word(std::size_t index) const;
  /// Inverse of information_word.
  std::size_t index_of_information(std::span<const InnerSymbol> info) const;

  std::optional<std::uint64_t> declared_hamming_distance;
  std::optional<std::uint64_t> declared_levenshtein_distance;

  /// Throws DomainError if a declared distance differs from the exhaustive value.
  void validate() const;

 private:
  std::uint32_t q_;
  std::size_t length_;
  std::vector<InnerWord> codewords_;
  std::string name_;
};

/// Binary (7,4,3) Hamming code, systematic: (d1 d2 d3 d4 p1 p2 p3) with
/// p1 = d1^d2^d4, p2 = d1^d3^d4, p3 = d2^d3^d4.
ClassicalCode hamming_7_4();

/// q-ary (ell, 1, ell) repetition code.
ClassicalCode repetition_code(std::uint32_t q, std::size_t ell);

std::uint64_t sequence_hamming_distance(std::span<const InnerSymbol> a,
                                        std::span<const InnerSymbol> b);

/// Insertion/deletion edit distance (no substitution move):
/// |p| + |r| - 2 LCS(p, r).
std::uint64_t levenshtein_distance(std::span<const InnerSymbol> p, std::span<const InnerSymbol> r);

std::uint64_t min_hamming_distance(const ClassicalCode& code);
std::uint64_t min_levenshtein_distance(const ClassicalCode& code);

/// Sequence number plus payload; written seq∘payload.
struct TaggedSymbol {
  std::uint32_t seq = 1;  ///< 1-based
  InnerSymbol payload = 0;

  friend bool operator==(const TaggedSymbol&, const TaggedSymbol&) = default;
  friend auto operator<=>(const TaggedSymbol&, const TaggedSymbol&) = default;
};

/// Tag encoding into the composite alphabet {1, ..., ell*q}:
///   symbol = (seq - 1) * q + payload + 1
/// Files written by either construction use this encoding.
Symbol encode_tag(const TaggedSymbol& tag, std::uint32_t q);
TaggedSymbol decode_tag(Symbol symbol, std::uint32_t q);

/// Composite alphabet size ell * q shared by both constructions.
Alphabet composite_alphabet(const ClassicalCode& inner);

/// Positional tags: codeword (p_1..p_ell) -> {1∘p_1, ..., ell∘p_ell}.
std::vector<TaggedSymbol> position_number(std::span<const InnerSymbol> word);

/// Run tags: maximal runs of equal symbols share one sequence number,
/// starting at 1 and increasing by 1 per run.
std::vector<TaggedSymbol> run_number(std::span<const InnerSymbol> word);

Multiset tagged_multiset(std::span<const TaggedSymbol> tags, std::uint32_t q, Alphabet composite);

/// Throws ResourceError when the inner code has more than `max_codewords` words.
Codebook subset_construct(const ClassicalCode& inner, std::uint64_t max_codewords = 1u << 16);
Codebook multiset_construct(const ClassicalCode& inner, std::uint64_t max_codewords = 1u << 16);

/// Receiver-side view of a positional-tag word: one slot per position,
/// empty where the position was erased.
struct PositionBuffer {
  std::vector<std::optional<InnerSymbol>> slots;
  std::size_t erasures = 0;
  /// Positions where two or more distinct payloads arrived and one was picked.
  std::size_t conflicts = 0;
};

/// Sorts received tags into positions. Distinct payloads sharing one
/// sequence number are resolved by a uniform pick from `engine`.
PositionBuffer recover_positions(const ClassicalCode& inner, const Multiset& received,
                                 Engine& engine);

/// Nearest codeword over the non-erased positions; nullopt unless the
/// minimizer is unique.
std::optional<std::size_t> decode_errors_and_erasures(const ClassicalCode& inner,
                                                      const PositionBuffer& buffer);

struct SubsetDecodeResult {
  std::optional<std::size_t> codeword_index;
  PositionBuffer buffer;
};

/// Position recovery followed by errors-and-erasures decoding of the inner code.
SubsetDecodeResult subset_decode(const ClassicalCode& inner, const Multiset& received,
                                 Engine& engine);

struct MultisetDecodeResult {
  std::optional<std::size_t> codeword_index;
  /// Payloads of the received tags ordered by (seq, payload).
  InnerWord candidate;
  std::uint64_t levenshtein_to_decoded = 0;
};

/// Orders received tags by (seq, payload), strips the tags, and decodes the
/// payload sequence to the unique inner codeword at minimum Levenshtein distance.
MultisetDecodeResult multiset_decode(const ClassicalCode& inner, const Multiset& received);

/// Inner-code text format: header `q=<int> count=<int> length=<int>`
/// (optionally `dh=<int>` and `dl=<int>` for declared Hamming/Levenshtein
/// distances), then one tuple of 1-based symbols per line, e.g. `(1,2,2,1)`.
ClassicalCode read_classical_code(std::istream& in, std::string name = "file");
ClassicalCode read_classical_code_file(const std::string& path);
void write_classical_code(std::ostream& out, const ClassicalCode& code);

}  // namespace mscodes
