#pragma once

// Property checks shared by the GoogleTest suite and the acceptance binary.
// Each check runs a number of random cases and reports how many failed,
// keeping the first failure's description.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "blogsum/evaluation.hpp"
#include "blogsum/summarizer.hpp"
#include "test_support.hpp"

namespace blogsum::testing {

struct CheckResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

inline const std::vector<std::string>& fixture_documents() {
  static const std::vector<std::string> names{"oop.txt", "oop.html", "mini.txt", "mini.json", "h1_title.html"};
  return names;
}

inline BlogDocument load_fixture(const std::string& name) {
  const auto path = data_path(name);
  return parse_document(read_file(path), input_format_for_path(path), {{}, path});
}

inline BlogDocument as_plain_document(const RandomDocument& doc) {
  return parse_document(doc.plain_text(), InputFormat::Plain, {{}, "random"});
}

/// Tokens of a fixture sentence for the brute-force scorer: ASCII letter and
/// digit runs, joined across an apostrophe or hyphen, lowercased.
inline std::vector<std::string> brute_force_tokens(const std::string& text) {
  std::string flat;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x80\x99") == 0) {
      flat += '\'';
      i += 2;
    } else {
      flat += text[i];
    }
  }
  auto alnum = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; };
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const char c = flat[i];
    if (alnum(c)) {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if ((c == '\'' || c == '-') && !cur.empty() && i + 1 < flat.size() && alnum(flat[i + 1])) {
      cur += c;
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string brute_force_stem(const std::string& token) {
  const bool plain_word = std::all_of(token.begin(), token.end(), [](char c) { return c >= 'a' && c <= 'z'; });
  if (!plain_word) return token;
  return porter_reference_map().at(token);
}

inline std::vector<std::size_t> brute_force_fixture_scores(const BlogDocument& doc, const SentenceSet& sentences) {
  const auto& stops = stopword_file();
  std::set<std::string> title;
  for (const auto& t : brute_force_tokens(doc.title))
    if (!stops.count(t)) title.insert(brute_force_stem(t));
  std::vector<std::size_t> scores;
  for (const auto& s : sentences) {
    std::size_t score = 0;
    for (const auto& t : brute_force_tokens(s.raw_text))
      if (!stops.count(t) && title.count(brute_force_stem(t))) ++score;
    scores.push_back(score);
  }
  return scores;
}

/// Literal scores of every fixture and `n_random` generated posts against
/// the brute-force counts.
inline CheckResult check_literal_scores(std::mt19937_64& rng, std::size_t n_random) {
  CheckResult r;
  for (const auto& name : fixture_documents()) {
    ++r.cases;
    const auto doc = load_fixture(name);
    const auto a = analyze(doc, {});
    const auto expected = brute_force_fixture_scores(doc, a.sentences);
    for (std::size_t j = 1; j <= a.sentences.size(); ++j) {
      const auto got = sentence_score(a.tsm, a.pfm, j);
      if (got != Rational(expected[j - 1])) {
        r.fail(name + " S" + std::to_string(j) + ": " + got.str() + " vs " + std::to_string(expected[j - 1]));
        break;
      }
    }
  }
  for (std::size_t c = 0; c < n_random; ++c) {
    ++r.cases;
    const auto gen = random_document(rng);
    const auto a = analyze(as_plain_document(gen), {});
    if (a.sentences.size() != gen.sentences.size()) {
      r.fail("segmentation of \"" + gen.body + "\"");
      continue;
    }
    for (std::size_t j = 1; j <= a.sentences.size(); ++j) {
      const auto expected = brute_force_score(gen.title_words, gen.sentence_words[j - 1]);
      const auto got = sentence_score(a.tsm, a.pfm, j);
      if (a.sentences[j - 1].raw_text != gen.sentences[j - 1] || got != Rational(expected)) {
        r.fail("\"" + gen.title + "\" / \"" + gen.sentences[j - 1] + "\": " + got.str() + " vs " +
               std::to_string(expected));
        break;
      }
    }
  }
  return r;
}

/// PFM == (TSM >= 1) elementwise, and sum(TSM * PFM) == sum(TSM) per column.
inline CheckResult check_pfm_consistency(std::mt19937_64& rng, std::size_t n_random) {
  CheckResult r;
  auto check = [&](const DocumentAnalysis& a, const std::string& label) {
    ++r.cases;
    for (std::size_t j = 0; j < a.tsm.n_sentences(); ++j) {
      std::uint64_t plain_sum = 0;
      std::uint64_t weighted = 0;
      for (std::size_t i = 0; i < a.tsm.n_terms(); ++i) {
        const auto t = a.tsm.entries(i, j);
        const auto p = a.pfm.entries(i, j);
        if (p != (t >= 1 ? 1 : 0)) r.fail(label + ": PFM(" + std::to_string(i) + "," + std::to_string(j) + ")");
        plain_sum += t;
        weighted += std::uint64_t{t} * p;
      }
      if (plain_sum != weighted || sentence_score(a.tsm, a.pfm, j + 1) != Rational(plain_sum))
        r.fail(label + ": column " + std::to_string(j + 1) + " sum");
    }
  };
  for (const auto& name : fixture_documents()) check(analyze(load_fixture(name), {}), name);
  for (std::size_t c = 0; c < n_random; ++c) {
    const auto gen = random_document(rng);
    check(analyze(as_plain_document(gen), {}), gen.title);
  }
  return r;
}

/// Ranking equals an independent sort by (score desc, index asc) regardless
/// of input order, and ranking twice gives the same result.
inline CheckResult check_tie_break(std::mt19937_64& rng, std::size_t n) {
  CheckResult r;
  for (std::size_t c = 0; c < n; ++c) {
    ++r.cases;
    const auto size = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
    std::vector<ScoredSentence> input;
    for (std::size_t i = 1; i <= size; ++i) {
      const auto num = std::uniform_int_distribution<std::uint64_t>(0, 3)(rng);
      const auto den = std::uniform_int_distribution<std::uint64_t>(1, 2)(rng);
      input.push_back({Sentence{i, "S" + std::to_string(i), {}}, Rational(num, den), 0});
    }
    std::shuffle(input.begin(), input.end(), rng);

    std::vector<std::pair<double, std::size_t>> reference;
    for (const auto& s : input) reference.emplace_back(-s.score.to_double(), s.sentence.index);
    std::sort(reference.begin(), reference.end());

    const auto ranked = rank_sentences(input);
    auto shuffled = input;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto again = rank_sentences(shuffled);
    for (std::size_t i = 0; i < size; ++i) {
      if (ranked[i].sentence.index != reference[i].second || again[i].sentence.index != reference[i].second) {
        r.fail("case " + std::to_string(c) + " position " + std::to_string(i));
        break;
      }
    }
  }
  return r;
}

/// Reordering the title terms leaves every sentence score unchanged.
inline CheckResult check_permutation_safety(std::mt19937_64& rng, std::size_t n) {
  CheckResult r;
  while (r.cases < n) {
    const auto gen = random_document(rng);
    const auto a = analyze(as_plain_document(gen), {});
    ++r.cases;
    std::vector<Term> terms(a.title_terms.begin(), a.title_terms.end());
    std::shuffle(terms.begin(), terms.end(), rng);
    const TitleTermset permuted(terms);
    const auto tsm = build_tsm(permuted, a.sentence_terms);
    const auto pfm = build_pfm(tsm);
    for (std::size_t j = 1; j <= a.sentences.size(); ++j) {
      for (auto v : {ScoreVariant::Literal, ScoreVariant::Coverage}) {
        if (sentence_score(tsm, pfm, j, v) != sentence_score(a.tsm, a.pfm, j, v)) {
          r.fail("\"" + gen.title + "\" S" + std::to_string(j));
          j = a.sentences.size();
          break;
        }
      }
    }
  }
  return r;
}

/// One more occurrence of a title word in sentence j raises its literal score
/// by exactly one, never lowers its coverage score, and leaves other sentences alone.
inline CheckResult check_monotonicity(std::mt19937_64& rng, std::size_t n) {
  CheckResult r;
  const auto& stops = stopword_file();
  while (r.cases < n) {
    auto gen = random_document(rng);
    std::vector<std::string> title_content;
    for (const auto& w : gen.title_words)
      if (!stops.count(w)) title_content.push_back(w);
    ++r.cases;
    const auto before = analyze(as_plain_document(gen), {});

    const auto j = std::uniform_int_distribution<std::size_t>(0, gen.sentences.size() - 1)(rng);
    const auto& word = title_content[std::uniform_int_distribution<std::size_t>(0, title_content.size() - 1)(rng)];
    auto& s = gen.sentences[j];
    const char end = s.back();
    s.pop_back();
    s += " " + word + end;
    gen.body.clear();
    for (std::size_t i = 0; i < gen.sentences.size(); ++i) gen.body += (i ? " " : "") + gen.sentences[i];
    const auto after = analyze(as_plain_document(gen), {});

    for (std::size_t i = 1; i <= gen.sentences.size(); ++i) {
      const auto old_lit = sentence_score(before.tsm, before.pfm, i);
      const auto new_lit = sentence_score(after.tsm, after.pfm, i);
      const auto old_cov = sentence_score(before.tsm, before.pfm, i, ScoreVariant::Coverage);
      const auto new_cov = sentence_score(after.tsm, after.pfm, i, ScoreVariant::Coverage);
      const bool ok = i == j + 1 ? (new_lit == Rational(old_lit.num() + 1) && new_cov > old_cov)
                                 : (new_lit == old_lit && new_cov == old_cov);
      if (!ok) {
        r.fail("\"" + gen.title + "\" + \"" + word + "\" in \"" + s + "\"");
        break;
      }
    }
  }
  return r;
}

/// Every selected sentence is the verbatim body slice named by its span, and
/// the summary respects k, zero exclusion and the requested ordering.
inline CheckResult check_summary_verbatim(std::mt19937_64& rng, std::size_t n) {
  CheckResult r;
  for (std::size_t c = 0; c < n; ++c) {
    ++r.cases;
    const auto gen = random_document(rng);
    const auto doc = as_plain_document(gen);
    SummaryOptions opts;
    opts.length = TopK{std::uniform_int_distribution<std::size_t>(1, 12)(rng)};
    opts.ordering = std::bernoulli_distribution(0.5)(rng) ? Ordering::Score : Ordering::Document;
    opts.variant = std::bernoulli_distribution(0.5)(rng) ? ScoreVariant::Literal : ScoreVariant::Coverage;
    opts.include_zero = std::bernoulli_distribution(0.3)(rng);
    const auto summary = summarize(doc, opts);
    bool ok = summary.selected.size() <= summary.k;
    for (std::size_t i = 0; ok && i < summary.selected.size(); ++i) {
      const auto& s = summary.selected[i];
      ok = doc.body.substr(s.sentence.span.begin, s.sentence.span.end - s.sentence.span.begin) ==
               s.sentence.raw_text &&
           doc.body.find(s.sentence.raw_text) != std::string::npos &&
           (opts.include_zero || s.score != Rational(0));
      if (ok && i > 0) {
        const auto& prev = summary.selected[i - 1];
        ok = opts.ordering == Ordering::Score ? prev.score >= s.score : prev.sentence.index < s.sentence.index;
      }
    }
    if (!ok) r.fail("\"" + gen.body + "\"");
  }
  return r;
}

/// Swapping candidate and model swaps precision and recall.
inline CheckResult check_evaluation_symmetry(std::mt19937_64& rng, std::size_t n) {
  static const std::vector<std::string> pool{
      "The river rose quickly.", "Farmers moved cattle.", "Schools closed.", "Power was restored.",
      "Roads reopened.",         "Claims doubled.",       "Volunteers helped.", "The mayor spoke."};
  auto variant = [&](std::string s) {
    if (std::bernoulli_distribution(0.3)(rng)) s = lower(s);
    if (std::bernoulli_distribution(0.3)(rng)) s.pop_back();
    if (std::bernoulli_distribution(0.2)(rng)) s = "  " + s + " ";
    return s;
  };
  auto draw = [&] {
    std::vector<std::string> out(std::uniform_int_distribution<std::size_t>(1, 8)(rng));
    for (auto& s : out) s = variant(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
    return out;
  };
  CheckResult r;
  for (std::size_t c = 0; c < n; ++c) {
    ++r.cases;
    const auto candidate = draw();
    const auto model = draw();
    const auto forward = evaluate(candidate, model);
    const auto backward = evaluate(model, candidate);
    if (forward.precision != backward.recall || forward.recall != backward.precision ||
        forward.n_common != backward.n_common)
      r.fail("case " + std::to_string(c) + ": " + forward.precision.str() + "/" + forward.recall.str() + " vs " +
             backward.precision.str() + "/" + backward.recall.str());
  }
  return r;
}

}  // namespace blogsum::testing
