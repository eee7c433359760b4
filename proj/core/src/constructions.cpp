#include "mscodes/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include "mscodes/errors.hpp"
#include "mscodes/key_value.hpp"
#include "text_util.hpp"

namespace mscodes {

namespace {

void require_composite(const ClassicalCode& inner, const Multiset& received) {
  const auto expected = composite_alphabet(inner).size();
  if (received.alphabet_size() != expected) {
    throw DomainError("received word over q=" + std::to_string(received.alphabet_size()) +
                      ", composite alphabet has " + std::to_string(expected) + " symbols");
  }
}

template <class Tagger>
Codebook construct(const ClassicalCode& inner, std::uint64_t max_codewords, Tagger tagger) {
  if (inner.size() > max_codewords) {
    throw ResourceError("inner code enumeration", inner.size(), max_codewords);
  }
  const Alphabet composite = composite_alphabet(inner);
  std::vector<Multiset> words;
  words.reserve(inner.size());
  for (const auto& p : inner.codewords()) {
    words.push_back(tagged_multiset(tagger(p), inner.alphabet_size(), composite));
  }
  return Codebook(composite, std::move(words));
}

/// Index of the unique minimizer of `score` over the codewords, if any.
template <class Score>
std::optional<std::size_t> unique_argmin(std::size_t count, Score score,
                                         std::uint64_t* best_out = nullptr) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::size_t best_index = 0;
  bool unique = false;
  for (std::size_t i = 0; i < count; ++i) {
    const auto s = score(i);
    if (s < best) {
      best = s;
      best_index = i;
      unique = true;
    } else if (s == best) {
      unique = false;
    }
  }
  if (best_out) *best_out = best;
  if (!unique) return std::nullopt;
  return best_index;
}

}  // namespace

ClassicalCode::ClassicalCode(std::uint32_t q, std::vector<InnerWord> codewords, std::string name)
    : q_(q), length_(0), codewords_(std::move(codewords)), name_(std::move(name)) {
  if (q == 0) throw DomainError("inner alphabet size must be at least 1");
  if (codewords_.size() < 2) throw DomainError("an inner code needs at least 2 codewords");
  length_ = codewords_.front().size();
  if (length_ == 0) throw DomainError("inner codewords must have length >= 1");
  for (const auto& w : codewords_) {
    if (w.size() != length_) throw DomainError("inner codewords must share one length");
    for (const auto s : w) {
      if (s >= q_) throw DomainError("inner symbol " + std::to_string(s + 1) + " outside 1..q");
    }
  }
  const std::set<InnerWord> distinct(codewords_.begin(), codewords_.end());
  if (distinct.size() != codewords_.size()) throw DomainError("duplicate inner codeword");
}

double ClassicalCode::dimension() const noexcept {
  if (q_ < 2) return 0.0;
  return std::log(static_cast<double>(codewords_.size())) / std::log(static_cast<double>(q_));
}

std::vector<InnerSymbol> ClassicalCode::information_word(std::size_t index) const {
  if (index >= codewords_.size()) throw DomainError("codeword index out of range");
  std::vector<InnerSymbol> digits;
  std::size_t capacity = 1;
  while (capacity < codewords_.size() && q_ >= 2) {
    capacity *= q_;
    digits.push_back(0);
  }
  if (capacity != codewords_.size()) {
    throw DomainError("code size " + std::to_string(codewords_.size()) + " is not a power of q");
  }
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<InnerSymbol>(index % q_);
    index /= q_;
  }
  return digits;
}

std::size_t ClassicalCode::index_of_information(std::span<const InnerSymbol> info) const {
  std::size_t index = 0;
  for (const auto digit : info) {
    if (digit >= q_) throw DomainError("information symbol outside alphabet");
    index = index * q_ + digit;
  }
  if (index >= codewords_.size()) throw DomainError("information word out of range");
  return index;
}

void ClassicalCode::validate() const {
  if (declared_hamming_distance && *declared_hamming_distance != min_hamming_distance(*this)) {
    throw DomainError("declared Hamming distance " + std::to_string(*declared_hamming_distance) +
                      " differs from computed " + std::to_string(min_hamming_distance(*this)));
  }
  if (declared_levenshtein_distance &&
      *declared_levenshtein_distance != min_levenshtein_distance(*this)) {
    throw DomainError("declared Levenshtein distance " +
                      std::to_string(*declared_levenshtein_distance) + " differs from computed " +
                      std::to_string(min_levenshtein_distance(*this)));
  }
}

ClassicalCode hamming_7_4() {
  std::vector<InnerWord> words;
  for (std::uint32_t info = 0; info < 16; ++info) {
    const InnerSymbol d1 = (info >> 3) & 1u;
    const InnerSymbol d2 = (info >> 2) & 1u;
    const InnerSymbol d3 = (info >> 1) & 1u;
    const InnerSymbol d4 = info & 1u;
    words.push_back({d1, d2, d3, d4, d1 ^ d2 ^ d4, d1 ^ d3 ^ d4, d2 ^ d3 ^ d4});
  }
  ClassicalCode code(2, std::move(words), "hamming74");
  code.declared_hamming_distance = 3;
  return code;
}

ClassicalCode repetition_code(std::uint32_t q, std::size_t ell) {
  if (q < 2) throw DomainError("repetition code needs q >= 2");
  std::vector<InnerWord> words;
  for (InnerSymbol a = 0; a < q; ++a) words.emplace_back(ell, a);
  ClassicalCode code(q, std::move(words),
                     "repetition_q" + std::to_string(q) + "_l" + std::to_string(ell));
  code.declared_hamming_distance = ell;
  code.declared_levenshtein_distance = 2 * ell;
  return code;
}

std::uint64_t sequence_hamming_distance(std::span<const InnerSymbol> a,
                                        std::span<const InnerSymbol> b) {
  if (a.size() != b.size()) throw DomainError("Hamming distance needs equal lengths");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
  return d;
}

std::uint64_t levenshtein_distance(std::span<const InnerSymbol> p, std::span<const InnerSymbol> r) {
  // Rolling-row LCS table.
  std::vector<std::uint64_t> prev(r.size() + 1, 0), row(r.size() + 1, 0);
  for (std::size_t i = 1; i <= p.size(); ++i) {
    for (std::size_t j = 1; j <= r.size(); ++j) {
      row[j] = p[i - 1] == r[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], row[j - 1]);
    }
    std::swap(prev, row);
  }
  return p.size() + r.size() - 2 * prev[r.size()];
}

std::uint64_t min_hamming_distance(const ClassicalCode& code) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      best = std::min(best, sequence_hamming_distance(code[i], code[j]));
    }
  }
  return best;
}

std::uint64_t min_levenshtein_distance(const ClassicalCode& code) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      best = std::min(best, levenshtein_distance(code[i], code[j]));
    }
  }
  return best;
}

Symbol encode_tag(const TaggedSymbol& tag, std::uint32_t q) {
  if (tag.seq == 0) throw DomainError("sequence numbers start at 1");
  if (tag.payload >= q) throw DomainError("payload outside inner alphabet");
  const std::uint64_t symbol = std::uint64_t{tag.seq - 1} * q + tag.payload + 1;
  if (symbol > std::numeric_limits<Symbol>::max()) throw DomainError("tag encoding overflow");
  return static_cast<Symbol>(symbol);
}

TaggedSymbol decode_tag(Symbol symbol, std::uint32_t q) {
  if (symbol == 0 || q == 0) throw DomainError("composite symbols start at 1");
  return TaggedSymbol{(symbol - 1) / q + 1, (symbol - 1) % q};
}

Alphabet composite_alphabet(const ClassicalCode& inner) {
  const std::uint64_t size = std::uint64_t{inner.alphabet_size()} * inner.length();
  if (size > std::numeric_limits<std::uint32_t>::max()) {
    throw DomainError("composite alphabet too large");
  }
  return Alphabet(static_cast<std::uint32_t>(size));
}

std::vector<TaggedSymbol> position_number(std::span<const InnerSymbol> word) {
  std::vector<TaggedSymbol> out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    out.push_back(TaggedSymbol{static_cast<std::uint32_t>(i + 1), word[i]});
  }
  return out;
}

std::vector<TaggedSymbol> run_number(std::span<const InnerSymbol> word) {
  std::vector<TaggedSymbol> out;
  out.reserve(word.size());
  std::uint32_t seq = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i == 0 || word[i] != word[i - 1]) ++seq;
    out.push_back(TaggedSymbol{seq, word[i]});
  }
  return out;
}

Multiset tagged_multiset(std::span<const TaggedSymbol> tags, std::uint32_t q, Alphabet composite) {
  std::vector<Symbol> symbols;
  symbols.reserve(tags.size());
  for (const auto& t : tags) symbols.push_back(encode_tag(t, q));
  return Multiset::from_elements(symbols, composite);
}

Codebook subset_construct(const ClassicalCode& inner, std::uint64_t max_codewords) {
  return construct(inner, max_codewords,
                   [](const InnerWord& p) { return position_number(p); });
}

Codebook multiset_construct(const ClassicalCode& inner, std::uint64_t max_codewords) {
  return construct(inner, max_codewords, [](const InnerWord& p) { return run_number(p); });
}

PositionBuffer recover_positions(const ClassicalCode& inner, const Multiset& received,
                                 Engine& engine) {
  require_composite(inner, received);
  const std::uint32_t q = inner.alphabet_size();
  PositionBuffer buffer;
  buffer.slots.resize(inner.length());
  const auto counts = received.multiplicities();
  std::vector<InnerSymbol> candidates;
  for (std::size_t pos = 0; pos < inner.length(); ++pos) {
    candidates.clear();
    for (InnerSymbol a = 0; a < q; ++a) {
      if (counts[pos * q + a] > 0) candidates.push_back(a);
    }
    if (candidates.empty()) {
      ++buffer.erasures;
    } else if (candidates.size() == 1) {
      buffer.slots[pos] = candidates.front();
    } else {
      ++buffer.conflicts;
      buffer.slots[pos] = candidates[uniform_below(engine, candidates.size())];
    }
  }
  return buffer;
}

std::optional<std::size_t> decode_errors_and_erasures(const ClassicalCode& inner,
                                                      const PositionBuffer& buffer) {
  if (buffer.slots.size() != inner.length()) throw DomainError("buffer length mismatch");
  return unique_argmin(inner.size(), [&](std::size_t i) {
    std::uint64_t mismatches = 0;
    for (std::size_t pos = 0; pos < buffer.slots.size(); ++pos) {
      if (buffer.slots[pos] && *buffer.slots[pos] != inner[i][pos]) ++mismatches;
    }
    return mismatches;
  });
}

SubsetDecodeResult subset_decode(const ClassicalCode& inner, const Multiset& received,
                                 Engine& engine) {
  SubsetDecodeResult result;
  result.buffer = recover_positions(inner, received, engine);
  result.codeword_index = decode_errors_and_erasures(inner, result.buffer);
  return result;
}

MultisetDecodeResult multiset_decode(const ClassicalCode& inner, const Multiset& received) {
  require_composite(inner, received);
  const std::uint32_t q = inner.alphabet_size();
  MultisetDecodeResult result;
  // Composite symbols ascend in (seq, payload) order, so the sorted element
  // list is already the candidate ordering.
  for (const Symbol s : received.elements()) result.candidate.push_back(decode_tag(s, q).payload);
  result.codeword_index = unique_argmin(
      inner.size(), [&](std::size_t i) { return levenshtein_distance(result.candidate, inner[i]); },
      &result.levenshtein_to_decoded);
  return result;
}

ClassicalCode read_classical_code(std::istream& in, std::string name) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint32_t q = 0;
  std::uint64_t expected = 0;
  std::uint64_t length = 0;
  std::optional<std::uint64_t> dh, dl;
  std::vector<InnerWord> words;

  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto text = detail::trim(line);
    if (text.empty()) continue;
    try {
      if (!have_header) {
        const auto kv = parse_key_values(text);
        for (const auto& [key, value] : kv) {
          if (key != "q" && key != "count" && key != "length" && key != "dh" && key != "dl") {
            throw ParseError("unknown header key '" + key + "'");
          }
        }
        if (!kv.contains("q") || !kv.contains("count") || !kv.contains("length")) {
          throw ParseError("header must be 'q=<int> count=<int> length=<int>'");
        }
        const auto qv = detail::parse_u64(kv.at("q"), "q");
        if (qv == 0 || qv > UINT32_MAX) throw ParseError("q out of range");
        q = static_cast<std::uint32_t>(qv);
        expected = detail::parse_u64(kv.at("count"), "count");
        length = detail::parse_u64(kv.at("length"), "length");
        if (kv.contains("dh")) dh = detail::parse_u64(kv.at("dh"), "dh");
        if (kv.contains("dl")) dl = detail::parse_u64(kv.at("dl"), "dl");
        have_header = true;
        continue;
      }
      InnerWord word;
      for (const auto token : detail::split(detail::unwrap(text, '(', ')', "inner codeword"), ',')) {
        const auto v = detail::parse_u64(token, "inner symbol");
        if (v == 0 || v > q) throw ParseError("inner symbol " + std::to_string(v) + " outside 1..q");
        word.push_back(static_cast<InnerSymbol>(v - 1));
      }
      if (word.size() != length) {
        throw ParseError("codeword has length " + std::to_string(word.size()) + ", header says " +
                         std::to_string(length));
      }
      words.push_back(std::move(word));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!have_header) throw ParseError("missing header 'q=<int> count=<int> length=<int>'", line_no);
  if (words.size() != expected) {
    throw ParseError("header declares count=" + std::to_string(expected) + " but file has " +
                     std::to_string(words.size()) + " codewords", line_no);
  }
  ClassicalCode code(q, std::move(words), std::move(name));
  code.declared_hamming_distance = dh;
  code.declared_levenshtein_distance = dl;
  return code;
}

ClassicalCode read_classical_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open inner code file '" + path + "'");
  try {
    return read_classical_code(in, path);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_classical_code(std::ostream& out, const ClassicalCode& code) {
  out << "q=" << code.alphabet_size() << " count=" << code.size() << " length=" << code.length()
      << " dh=" << min_hamming_distance(code) << " dl=" << min_levenshtein_distance(code) << '\n';
  for (const auto& w : code.codewords()) {
    out << '(';
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i] + 1;
    out << ")\n";
  }
}

}  // namespace mscodes
