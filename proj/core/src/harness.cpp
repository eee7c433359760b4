#include "mscodes/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mscodes/errors.hpp"
#include "mscodes/key_value.hpp"
#include "mscodes/version.hpp"
#include "parallel.hpp"
#include "text_util.hpp"

namespace mscodes::harness {

namespace {

std::string join_rosters(const std::vector<Multiset>& words) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) out += (i ? "," : "") + to_roster(words[i]);
  return out + "}";
}

std::string render_tags(const std::vector<TaggedSymbol>& tags) {
  // Payloads 0, 1, 2, ... print as a, b, c, ...
  std::string out = "(";
  for (std::size_t i = 0; i < tags.size(); ++i) {
    out += (i ? ", " : "") + std::to_string(tags[i].seq) + "∘" +
           static_cast<char>('a' + tags[i].payload);
  }
  return out + ")";
}

std::vector<std::string> split_colon(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = spec.find(':', start);
    parts.push_back(spec.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint32_t parse_u32(std::string_view token, std::string_view what) {
  const auto v = detail::parse_u64(token, what);
  if (v > UINT32_MAX) throw ParseError(std::string(what) + " out of range");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::vector<ExampleCheck> worked_examples() {
  const Alphabet s5(5);
  const Alphabet s4(4);
  const auto x = [s4] { return Multiset::from_elements({1, 2, 2, 2, 3}, s4); };
  const auto y = [s4] { return Multiset::from_elements({1, 2, 2, 3, 3, 4}, s4); };

  return {
      {"subset {1,2} <-> 11000", "11000",
       [s5] { return to_characteristic_vector(Multiset::from_elements({1, 2}, s5)).to_string(); }},
      {"subset {2,4} <-> 01010", "01010",
       [s5] { return to_characteristic_vector(Multiset::from_elements({2, 4}, s5)).to_string(); }},
      {"binary code {11000,01010,01110,00111} as subsets", "{{1,2},{2,4},{2,3,4},{3,4,5}}",
       [] {
         std::vector<Multiset> words;
         for (const auto* bits : {"11000", "01010", "01110", "00111"}) {
           words.push_back(from_characteristic_vector(BinaryVector::parse(bits)));
         }
         return join_rosters(words);
       }},
      {"{1,2} symmetric difference {2,4}", "{1,4}",
       [s5] {
         return to_roster(symmetric_difference(Multiset::from_elements({1, 2}, s5),
                                               Multiset::from_elements({2, 4}, s5)));
       }},
      {"d({1,2},{2,4})", "2",
       [s5] {
         return std::to_string(
             distance(Multiset::from_elements({1, 2}, s5), Multiset::from_elements({2, 4}, s5)));
       }},
      {"d_H(11000,01010)", "2",
       [] {
         return std::to_string(
             hamming_distance(BinaryVector::parse("11000"), BinaryVector::parse("01010")));
       }},
      {"X intersect Y", "{1,2,2,3}", [x, y] { return to_roster(intersection(x(), y())); }},
      {"X union Y", "{1,2,2,2,3,3,4}", [x, y] { return to_roster(multiset_union(x(), y())); }},
      {"X minus Y", "{2}", [x, y] { return to_roster(difference(x(), y())); }},
      {"Y minus X", "{3,4}", [x, y] { return to_roster(difference(y(), x())); }},
      {"|X|", "5", [x] { return std::to_string(cardinality(x())); }},
      {"|Y|", "6", [y] { return std::to_string(cardinality(y())); }},
      {"run numbering of (a,a,b,b,c,b)", "(1∘a, 1∘a, 2∘b, 2∘b, 3∘c, 4∘b)",
       [] {
         const InnerWord word{0, 0, 1, 1, 2, 1};
         return render_tags(run_number(word));
       }},
  };
}

bool run_examples(const std::vector<ExampleCheck>& checks, std::ostream& out) {
  bool all = true;
  for (const auto& check : checks) {
    std::string got;
    try {
      got = check.compute();
    } catch (const std::exception& e) {
      got = std::string("exception: ") + e.what();
    }
    if (got == check.expected) {
      out << "PASS " << check.name << '\n';
    } else {
      all = false;
      out << "FAIL " << check.name << ": expected " << check.expected << ", got " << got << '\n';
    }
  }
  return all;
}

ClassicalCode resolve_inner_code(const std::string& spec) {
  const auto parts = split_colon(spec);
  if (parts.size() == 1 && parts[0] == "hamming74") return hamming_7_4();
  if (parts.size() == 3 && parts[0] == "repetition") {
    return repetition_code(parse_u32(parts[1], "repetition q"),
                           parse_u32(parts[2], "repetition length"));
  }
  if (parts.size() >= 2 && parts[0] == "file") {
    auto code = read_classical_code_file(spec.substr(5));
    code.validate();
    return code;
  }
  throw ParseError("unknown inner code '" + spec +
                   "' (expected hamming74, repetition:<q>:<len> or file:<path>)");
}

CodeSource resolve_code_source(const std::string& spec) {
  for (const auto& [prefix, kind] : {std::pair{std::string("subset:"), Construction::subset},
                                     std::pair{std::string("multiset:"), Construction::multiset}}) {
    if (spec.rfind(prefix, 0) == 0) {
      auto inner = resolve_inner_code(spec.substr(prefix.size()));
      auto book = kind == Construction::subset ? subset_construct(inner) : multiset_construct(inner);
      return CodeSource{spec, std::move(book), kind, std::move(inner)};
    }
  }
  return CodeSource{spec, read_codebook_file(spec), Construction::none, std::nullopt};
}

void ExperimentConfig::validate() const {
  if (trials == 0) throw DomainError("trial count must be at least 1");
}

std::string ExperimentConfig::to_string() const {
  return "codebook=" + codebook + " trials=" + std::to_string(trials) +
         " seed=" + std::to_string(seed.value) +
         " decoder=" + (decoder == DecoderKind::structured ? "structured" : "min_distance") + " " +
         channel.to_string();
}

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
  auto kv = parse_key_values(text);
  ExperimentConfig cfg;
  const auto take = [&](const std::string& key) -> std::optional<std::string> {
    const auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    auto value = it->second;
    kv.erase(it);
    return value;
  };
  if (auto v = take("codebook")) cfg.codebook = *v;
  if (auto v = take("trials")) cfg.trials = detail::parse_u64(*v, "trials");
  if (auto v = take("seed")) cfg.seed = RngSeed{detail::parse_u64(*v, "seed")};
  if (auto v = take("output")) cfg.output = *v;
  if (auto v = take("threads")) cfg.threads = parse_u32(*v, "threads");
  if (auto v = take("decoder")) {
    if (*v == "structured") {
      cfg.decoder = DecoderKind::structured;
    } else if (*v == "min_distance") {
      cfg.decoder = DecoderKind::min_distance;
    } else {
      throw ParseError("unknown decoder '" + *v + "'");
    }
  }
  if (!kv.empty()) {
    std::string rest;
    for (const auto& [key, value] : kv) rest += key + "=" + value + " ";
    cfg.channel = ChannelSpec::parse(rest);
  }
  return cfg;
}

const char* to_string(TrialOutcome outcome) {
  switch (outcome) {
    case TrialOutcome::success: return "success";
    case TrialOutcome::failure: return "failure";
    case TrialOutcome::ambiguous: return "ambiguous";
  }
  return "unknown";
}

TrialReport simulate(const ExperimentConfig& cfg, const CodeSource& source,
                     std::vector<TrialRow>* rows) {
  cfg.validate();
  if (cfg.decoder == DecoderKind::structured && !source.inner) {
    throw DomainError("structured decoding needs a subset: or multiset: construction");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto& book = source.codebook;
  for (const auto& w : book.codewords()) cfg.channel.validate_for(w.cardinality(), book.alphabet().size());

  std::vector<TrialRow> local(cfg.trials);
  detail::parallel_for(cfg.trials, cfg.threads, [&](std::size_t i) {
    auto engine = make_engine(derive_seed(cfg.seed, i));
    TrialRow row;
    row.trial = i;
    row.codeword_index = static_cast<std::size_t>(uniform_below(engine, book.size()));
    const auto& sent = book[row.codeword_index];
    const auto tx = transmit_multiset(sent, cfg.channel, engine);
    row.effective = tx.effective;
    row.distance_to_sent = distance(sent, tx.received);

    if (cfg.decoder == DecoderKind::min_distance) {
      const auto decoded = decode_min_distance(book, tx.received);
      row.decoded_index = static_cast<std::int64_t>(decoded.index);
      row.outcome = !decoded.unique                        ? TrialOutcome::ambiguous
                    : decoded.index == row.codeword_index ? TrialOutcome::success
                                                          : TrialOutcome::failure;
    } else {
      const auto index = source.construction == Construction::subset
                             ? subset_decode(*source.inner, tx.received, engine).codeword_index
                             : multiset_decode(*source.inner, tx.received).codeword_index;
      if (!index) {
        row.outcome = TrialOutcome::ambiguous;
      } else {
        row.decoded_index = static_cast<std::int64_t>(*index);
        row.outcome = *index == row.codeword_index ? TrialOutcome::success : TrialOutcome::failure;
      }
    }
    local[i] = row;
  });

  TrialReport report;
  report.trials = cfg.trials;
  std::uint64_t s = 0, rho = 0, t = 0;
  for (const auto& row : local) {
    switch (row.outcome) {
      case TrialOutcome::success: ++report.decode_successes; break;
      case TrialOutcome::failure: ++report.decode_failures; break;
      case TrialOutcome::ambiguous: ++report.ambiguous_decodes; break;
    }
    s += row.effective.insertions;
    rho += row.effective.deletions;
    t += row.effective.substitutions;
  }
  const auto n = static_cast<double>(cfg.trials);
  report.error_rate = static_cast<double>(report.decode_failures + report.ambiguous_decodes) / n;
  report.mean_insertions = static_cast<double>(s) / n;
  report.mean_deletions = static_cast<double>(rho) / n;
  report.mean_substitutions = static_cast<double>(t) / n;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (rows) *rows = std::move(local);
  return report;
}

TrialReport run_simulation(const ExperimentConfig& cfg) {
  const auto source = resolve_code_source(cfg.codebook);
  std::vector<TrialRow> rows;
  const auto report = simulate(cfg, source, cfg.output.empty() ? nullptr : &rows);
  if (!cfg.output.empty()) {
    std::ofstream out(cfg.output);
    if (!out) throw std::runtime_error("cannot write '" + cfg.output + "'");
    write_trial_csv(out, cfg, source, rows, report);
    if (!out) throw std::runtime_error("error writing '" + cfg.output + "'");
  }
  return report;
}

void write_trial_csv(std::ostream& out, const ExperimentConfig& cfg, const CodeSource& source,
                     const std::vector<TrialRow>& rows, const TrialReport& report) {
  out << "# mscodes " << kVersion << '\n';
  out << "# config " << cfg.to_string() << '\n';
  out << "# code q=" << source.codebook.alphabet().size() << " count=" << source.codebook.size()
      << '\n';
  out << "trial,codeword_index,s_eff,rho_eff,t_eff,distance_to_sent,decoded_index,outcome\n";
  for (const auto& r : rows) {
    out << r.trial << ',' << r.codeword_index << ',' << r.effective.insertions << ','
        << r.effective.deletions << ',' << r.effective.substitutions << ',' << r.distance_to_sent
        << ',' << r.decoded_index << ',' << to_string(r.outcome) << '\n';
  }
  out << "# summary trials=" << report.trials << " successes=" << report.decode_successes
      << " failures=" << report.decode_failures << " ambiguous=" << report.ambiguous_decodes
      << " error_rate=" << report.error_rate << '\n';
}

std::string to_json(const TrialReport& report, const ExperimentConfig& cfg) {
  nlohmann::json j{{"version", std::string(kVersion)},
                   {"config", cfg.to_string()},
                   {"seed", cfg.seed.value},
                   {"trials", report.trials},
                   {"decode_successes", report.decode_successes},
                   {"decode_failures", report.decode_failures},
                   {"ambiguous_decodes", report.ambiguous_decodes},
                   {"error_rate", report.error_rate},
                   {"mean_s", report.mean_insertions},
                   {"mean_rho", report.mean_deletions},
                   {"mean_t", report.mean_substitutions},
                   {"elapsed", report.elapsed_seconds}};
  return j.dump(2);
}

EnumerationCounts enumerate_counts(std::uint32_t q, std::uint32_t ell, std::uint64_t budget) {
  if (q == 0) throw DomainError("alphabet size must be at least 1");
  EnumerationCounts c;
  c.q = q;
  c.ell = ell;
  c.multisets_formula = sphere_size(q, ell);
  c.subsets_formula = binomial(q, ell);
  if (c.multisets_formula > budget) {
    throw ResourceError("sphere enumeration", c.multisets_formula, budget);
  }
  SphereEnumerator points(q, ell);
  while (auto v = points.next()) {
    ++c.multisets_enumerated;
    const auto& e = v->entries();
    if (std::all_of(e.begin(), e.end(), [](Multiplicity m) { return m <= 1; })) {
      ++c.subsets_enumerated;
    }
  }
  return c;
}

std::vector<IntegerVector> search_sphere_code(std::uint32_t q, std::uint32_t ell, std::uint64_t d,
                                              SearchStrategy strategy,
                                              const SearchOptions& options) {
  const auto size = sphere_size(q, ell);
  if (size > options.budget) throw ResourceError("sphere enumeration", size, options.budget);
  if (strategy == SearchStrategy::exhaustive && size > options.exhaustive_limit) {
    throw ResourceError("exhaustive search", size, options.exhaustive_limit);
  }

  if (strategy == SearchStrategy::greedy) {
    std::vector<IntegerVector> admitted;
    SphereEnumerator points(q, ell);
    while (auto v = points.next()) {
      const bool far = std::all_of(admitted.begin(), admitted.end(), [&](const IntegerVector& a) {
        return manhattan_distance(a, *v) >= d;
      });
      if (far) admitted.push_back(std::move(*v));
    }
    return admitted;
  }

  std::vector<IntegerVector> points;
  SphereEnumerator walk(q, ell);
  while (auto v = walk.next()) points.push_back(std::move(*v));
  const std::size_t n = points.size();
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      compatible[i][j] = compatible[j][i] = manhattan_distance(points[i], points[j]) >= d;
    }
  }

  // Maximum clique by branch and bound; candidates stay in lexicographic
  // order and only strictly larger cliques replace the incumbent.
  std::vector<std::size_t> best, current;
  const auto expand = [&](auto&& self, const std::vector<std::size_t>& candidates) -> void {
    if (current.size() > best.size()) best = current;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (current.size() + (candidates.size() - k) <= best.size()) return;
      const auto v = candidates[k];
      std::vector<std::size_t> next;
      for (std::size_t m = k + 1; m < candidates.size(); ++m) {
        if (compatible[v][candidates[m]]) next.push_back(candidates[m]);
      }
      current.push_back(v);
      self(self, next);
      current.pop_back();
    }
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  expand(expand, all);

  std::vector<IntegerVector> out;
  for (const auto i : best) out.push_back(points[i]);
  return out;
}

std::optional<Codebook> search_code(std::uint32_t q, std::uint32_t ell, std::uint64_t d,
                                    SearchStrategy strategy, const SearchOptions& options) {
  const auto points = search_sphere_code(q, ell, d, strategy, options);
  if (points.size() < 2) return std::nullopt;
  std::vector<Multiset> words;
  for (const auto& p : points) words.push_back(from_multiplicity_vector(p));
  return Codebook(Alphabet(q), std::move(words));
}

}  // namespace mscodes::harness
