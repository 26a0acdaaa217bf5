#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "blogsum/error.hpp"
#include "blogsum/ingestion.hpp"
#include "blogsum/porter.hpp"
#include "blogsum/utf8.hpp"

namespace blogsum {

class Term;
std::optional<Term> normalize(std::string_view token);

/// A normalized word: case- and compatibility-folded, no leading or trailing
/// punctuation, at least one letter or digit. Only `normalize` and the
/// pipeline stages create terms, so every Term satisfies those invariants.
class Term {
 public:
  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  explicit Term(std::string value) : value_(std::move(value)) {}

  friend std::optional<Term> normalize(std::string_view token);
  friend class PipelineStages;

  std::string value_;
};

/// Maximal runs of letters and digits; an apostrophe or hyphen is kept when it
/// sits between two such characters ("don't", "easy-to-read"). Everything
/// else separates tokens.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t start = std::string_view::npos;
  std::size_t pos = 0;
  auto flush = [&](std::size_t end) {
    if (start != std::string_view::npos) tokens.emplace_back(text.substr(start, end - start));
    start = std::string_view::npos;
  };
  while (pos < text.size()) {
    const auto d = utf8::decode(text, pos);
    const char32_t cp = d ? d->cp : char32_t{0xFFFD};
    const std::size_t len = d ? d->length : 1;
    if (utf8::is_word_char(cp)) {
      if (start == std::string_view::npos) start = pos;
    } else if (start != std::string_view::npos && (utf8::is_apostrophe(cp) || utf8::is_hyphen(cp))) {
      const auto next = utf8::decode(text, pos + len);
      if (!next || !utf8::is_word_char(next->cp)) flush(pos);
    } else {
      flush(pos);
    }
    pos += len;
  }
  flush(text.size());
  return tokens;
}

inline std::optional<Term> normalize(std::string_view token) {
  const std::string folded = utf8::fold(token);
  std::string_view view = folded;
  // Strip anything that is not a letter or digit from both ends.
  while (!view.empty()) {
    const auto d = utf8::decode(view, 0);
    if (d && utf8::is_word_char(d->cp)) break;
    view.remove_prefix(d ? d->length : 1);
  }
  while (!view.empty()) {
    std::size_t start = view.size() - 1;
    while (start > 0 && (static_cast<unsigned char>(view[start]) & 0xC0) == 0x80) --start;
    const auto d = utf8::decode(view, start);
    if (d && utf8::is_word_char(d->cp)) break;
    view.remove_suffix(view.size() - start);
  }
  if (view.empty()) return std::nullopt;
  return Term(std::string(view));
}

inline constexpr std::string_view kDefaultStopwords[] = {
    "a",       "about",   "above",      "after",     "again",    "against", "all",
    "also",    "am",      "an",         "and",       "any",      "are",     "as",
    "at",      "be",      "because",    "been",      "before",   "being",   "below",
    "between", "both",    "but",        "by",        "can",      "could",   "did",
    "do",      "does",    "doing",      "don't",     "down",     "during",  "each",
    "etc",     "few",     "for",        "from",      "further",  "had",     "has",
    "have",    "having",  "he",         "her",       "here",     "hers",    "herself",
    "him",     "himself", "his",        "how",       "i",        "if",      "in",
    "into",    "is",      "it",         "it's",      "its",      "itself",  "just",
    "many",    "may",     "me",         "might",     "more",     "most",    "must",
    "my",      "myself",  "no",         "nor",       "not",      "now",     "of",
    "off",     "on",      "once",       "only",      "or",       "other",   "our",
    "ours",    "ourselves", "out",      "over",      "own",      "same",    "shall",
    "she",     "should",  "so",         "some",      "such",     "than",    "that",
    "the",     "their",   "theirs",     "them",      "themselves", "then",  "there",
    "these",   "they",    "this",       "those",     "through",  "to",      "too",
    "under",   "until",   "up",         "upon",      "very",     "was",     "we",
    "were",    "what",    "when",       "where",     "which",    "while",   "who",
    "whom",    "why",     "will",       "with",      "would",    "you",     "your",
    "yours",   "yourself", "yourselves",
};

class Stoplist {
 public:
  Stoplist() = default;

  static Stoplist default_english() {
    Stoplist list;
    for (auto word : kDefaultStopwords) list.add(word);
    return list;
  }

  /// One term per line; blank lines and lines starting with '#' are skipped.
  static Stoplist from_stream(std::istream& in) {
    Stoplist list;
    std::string line;
    while (std::getline(in, line)) {
      const auto trimmed = utf8::trim(line);
      if (trimmed.empty() || trimmed.front() == '#') continue;
      list.add(trimmed);
    }
    return list;
  }

  static Stoplist load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidConfig, "cannot read stoplist " + path.string());
    return from_stream(in);
  }

  void add(std::string_view word) {
    if (auto term = normalize(word)) terms_.insert(term->str());
  }

  bool contains(const Term& term) const { return terms_.count(term.str()) > 0; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Sorted members, for inspection and tests.
  std::vector<std::string> members() const {
    std::vector<std::string> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::unordered_set<std::string> terms_;
};

/// Surface form -> lemma lookup, applied before stemming.
class Lexicon {
 public:
  Lexicon() = default;

  /// Irregular plurals and the cars/automobile -> car folding.
  static Lexicon demo() {
    static constexpr std::pair<std::string_view, std::string_view> kEntries[] = {
        {"cars", "car"},      {"automobile", "car"}, {"automobiles", "car"},
        {"children", "child"}, {"men", "man"},       {"women", "woman"},
        {"mice", "mouse"},    {"geese", "goose"},    {"feet", "foot"},
        {"teeth", "tooth"},   {"people", "person"},  {"oxen", "ox"},
        {"indices", "index"}, {"analyses", "analysis"},
    };
    Lexicon lex;
    for (const auto& [surface, lemma] : kEntries) lex.add(surface, lemma);
    return lex;
  }

  /// Lines of "surface<TAB>lemma"; blank lines and '#' lines are skipped.
  static Lexicon from_stream(std::istream& in, std::string_view name = "lexicon") {
    Lexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (utf8::is_blank(line) || utf8::trim(line).front() == '#') continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos || !lex.add(std::string_view(line).substr(0, tab),
                                               std::string_view(line).substr(tab + 1)))
        throw Error(ErrorKind::InvalidConfig,
                    std::string(name) + ":" + std::to_string(line_no) + ": expected surface<TAB>lemma");
    }
    return lex;
  }

  static Lexicon load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidConfig, "cannot read lexicon " + path.string());
    return from_stream(in, path.string());
  }

  bool add(std::string_view surface, std::string_view lemma) {
    auto s = normalize(surface);
    auto l = normalize(lemma);
    if (!s || !l) return false;
    entries_.insert_or_assign(std::move(*s), std::move(*l));
    return true;
  }

  const Term* find(const Term& term) const {
    const auto it = entries_.find(term);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<Term, Term> entries_;
};

enum class StemmerKind { Porter, None };

/// One configuration object drives both the title and the sentences so the
/// two sides always see identical processing.
struct PipelineConfig {
  Stoplist stoplist = Stoplist::default_english();
  Lexicon lexicon;
  StemmerKind stemmer = StemmerKind::Porter;
};

inline std::vector<Term> remove_stopwords(std::vector<Term> terms, const Stoplist& stoplist) {
  std::erase_if(terms, [&](const Term& t) { return stoplist.contains(t); });
  return terms;
}

class PipelineStages {
 public:
  static Term lemmatize(const Term& term, const Lexicon& lexicon) {
    const Term* lemma = lexicon.find(term);
    return lemma ? *lemma : term;
  }

  static Term stem(const Term& term, StemmerKind kind) {
    if (kind == StemmerKind::None) return term;
    return Term(porter_stem(term.str()));
  }
};

inline Term lemmatize(const Term& term, const Lexicon& lexicon) {
  return PipelineStages::lemmatize(term, lexicon);
}

inline Term stem(const Term& term, StemmerKind kind = StemmerKind::Porter) {
  return PipelineStages::stem(term, kind);
}

/// Runs the full pipeline over `text`, keeping duplicates in order.
inline std::vector<Term> process_text(std::string_view text, const PipelineConfig& config) {
  std::vector<Term> normalized;
  for (const auto& token : tokenize(text))
    if (auto term = normalize(token)) normalized.push_back(std::move(*term));
  auto kept = remove_stopwords(std::move(normalized), config.stoplist);
  std::vector<Term> out;
  out.reserve(kept.size());
  for (const auto& term : kept) out.push_back(stem(lemmatize(term, config.lexicon), config.stemmer));
  return out;
}

/// Distinct title terms in order of first occurrence.
class TitleTermset {
 public:
  TitleTermset() = default;
  explicit TitleTermset(const std::vector<Term>& terms) {
    for (const auto& t : terms)
      if (!index_of(t)) terms_.push_back(t);
  }

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const Term& operator[](std::size_t i) const { return terms_[i]; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  std::optional<std::size_t> index_of(const Term& t) const {
    const auto it = std::find(terms_.begin(), terms_.end(), t);
    if (it == terms_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - terms_.begin());
  }

  bool contains(const Term& t) const { return index_of(t).has_value(); }

  friend bool operator==(const TitleTermset&, const TitleTermset&) = default;

 private:
  std::vector<Term> terms_;
};

inline TitleTermset build_title_termset(std::string_view title, const PipelineConfig& config) {
  TitleTermset set(process_text(title, config));
  if (set.empty())
    throw Error(ErrorKind::EmptyTermset,
                "title \"" + std::string(title) + "\" has no terms after stopword removal");
  return set;
}

/// Processed terms of one sentence, with multiplicities.
struct SentenceTerms {
  std::size_t sentence_index = 0;
  std::map<Term, std::size_t> counts;

  std::size_t count(const Term& term) const {
    const auto it = counts.find(term);
    return it == counts.end() ? 0 : it->second;
  }

  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& [term, c] : counts) n += c;
    return n;
  }
};

inline SentenceTerms process_sentence(const Sentence& sentence, const PipelineConfig& config) {
  SentenceTerms out;
  out.sentence_index = sentence.index;
  for (auto& term : process_text(sentence.raw_text, config)) ++out.counts[std::move(term)];
  return out;
}

}  // namespace blogsum
