#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "blogsum/error.hpp"
#include "blogsum/html.hpp"
#include "blogsum/utf8.hpp"

namespace blogsum {

enum class InputFormat { Html, Record, Plain };

inline std::optional<InputFormat> parse_input_format(std::string_view name) {
  if (name == "html") return InputFormat::Html;
  if (name == "record") return InputFormat::Record;
  if (name == "plain") return InputFormat::Plain;
  return std::nullopt;
}

/// .html/.htm -> html, .json -> record, anything else -> plain.
inline InputFormat input_format_for_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return InputFormat::Plain;
  const auto ext = html_detail::lower(path.substr(dot + 1));
  if (ext == "html" || ext == "htm" || ext == "xhtml") return InputFormat::Html;
  if (ext == "json") return InputFormat::Record;
  return InputFormat::Plain;
}

/// A blog page split into its parts. Comments are carried for reporting but
/// never enter the body.
struct BlogDocument {
  std::string title;
  std::string body;
  std::vector<std::string> comments;
  std::string source_id;

  friend bool operator==(const BlogDocument&, const BlogDocument&) = default;
};

struct Span {
  std::size_t begin = 0;  // byte offsets into the body
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

struct Sentence {
  std::size_t index = 0;  // 1-based document position
  std::string raw_text;   // == body.substr(span.begin, span.end - span.begin)
  Span span;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct SentenceSet {
  std::vector<Sentence> sentences;

  std::size_t size() const noexcept { return sentences.size(); }
  bool empty() const noexcept { return sentences.empty(); }
  const Sentence& operator[](std::size_t i) const { return sentences[i]; }
  auto begin() const noexcept { return sentences.begin(); }
  auto end() const noexcept { return sentences.end(); }

  friend bool operator==(const SentenceSet&, const SentenceSet&) = default;
};

struct ParseOptions {
  CommentSelector comment_selector;
  std::string source_id;  // used when the input does not name itself
};

namespace ingestion_detail {

inline std::string_view strip_bom(std::string_view raw) {
  if (raw.substr(0, 3) == "\xEF\xBB\xBF") raw.remove_prefix(3);
  return raw;
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& source_id, const std::string& what) {
  throw Error(kind, what, source_id);
}

inline BlogDocument parse_plain(std::string_view text, const ParseOptions& opts) {
  BlogDocument doc;
  doc.source_id = opts.source_id;
  const auto first_nl = text.find('\n');
  const auto title_line = text.substr(0, first_nl);
  doc.title = std::string(utf8::trim(title_line));
  if (doc.title.empty()) fail(ErrorKind::MissingTitle, doc.source_id, "first line is blank");
  if (first_nl == std::string_view::npos) fail(ErrorKind::EmptyBody, doc.source_id, "no body after title");

  // The title block must be exactly one line; the body starts after the first blank line.
  std::size_t pos = first_nl + 1;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    const auto next = nl == std::string_view::npos ? text.size() : nl + 1;
    if (utf8::is_blank(line)) {
      pos = next;
      break;
    }
    fail(ErrorKind::MalformedInput, doc.source_id,
         "title must be a single line followed by a blank line");
  }
  doc.body = std::string(utf8::trim(text.substr(std::min(pos, text.size()))));
  if (utf8::is_blank(doc.body)) fail(ErrorKind::EmptyBody, doc.source_id, "body is empty");
  return doc;
}

inline BlogDocument parse_record(std::string_view text, const ParseOptions& opts) {
  BlogDocument doc;
  doc.source_id = opts.source_id;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::MalformedInput, doc.source_id, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorKind::MalformedInput, doc.source_id, "record must be a JSON object");
  if (const auto it = j.find("source_id"); it != j.end()) {
    if (!it->is_string()) fail(ErrorKind::MalformedInput, doc.source_id, "\"source_id\" must be a string");
    doc.source_id = it->get<std::string>();
  }
  const auto title = j.find("title");
  if (title == j.end()) fail(ErrorKind::MissingTitle, doc.source_id, "record has no \"title\"");
  if (!title->is_string()) fail(ErrorKind::MalformedInput, doc.source_id, "\"title\" must be a string");
  doc.title = utf8::collapse_whitespace(title->get<std::string>());
  if (doc.title.empty()) fail(ErrorKind::MissingTitle, doc.source_id, "\"title\" is blank");

  const auto body = j.find("body");
  if (body == j.end()) fail(ErrorKind::EmptyBody, doc.source_id, "record has no \"body\"");
  if (!body->is_string()) fail(ErrorKind::MalformedInput, doc.source_id, "\"body\" must be a string");
  doc.body = body->get<std::string>();
  if (utf8::is_blank(doc.body)) fail(ErrorKind::EmptyBody, doc.source_id, "\"body\" is empty");

  if (const auto comments = j.find("comments"); comments != j.end()) {
    if (!comments->is_array())
      fail(ErrorKind::MalformedInput, doc.source_id, "\"comments\" must be an array of strings");
    for (const auto& c : *comments) {
      if (!c.is_string())
        fail(ErrorKind::MalformedInput, doc.source_id, "\"comments\" must be an array of strings");
      doc.comments.push_back(c.get<std::string>());
    }
  }
  // nlohmann accepts invalid UTF-8 inside strings only partially; re-check the pieces.
  if (!utf8::is_valid(doc.title) || !utf8::is_valid(doc.body))
    fail(ErrorKind::MalformedInput, doc.source_id, "invalid UTF-8 in record");
  return doc;
}

inline BlogDocument parse_html(std::string_view text, const ParseOptions& opts) {
  BlogDocument doc;
  doc.source_id = opts.source_id;
  auto page = extract_html(text, opts.comment_selector);
  if (page.title) {
    doc.title = std::move(*page.title);
  } else if (page.first_h1) {
    doc.title = std::move(*page.first_h1);
  } else {
    fail(ErrorKind::MissingTitle, doc.source_id, "no <title> or <h1> element");
  }
  for (std::size_t i = 0; i < page.paragraphs.size(); ++i) {
    if (i > 0) doc.body += "\n\n";
    doc.body += page.paragraphs[i];
  }
  if (utf8::is_blank(doc.body)) fail(ErrorKind::EmptyBody, doc.source_id, "no paragraph content");
  doc.comments = std::move(page.comments);
  return doc;
}

}  // namespace ingestion_detail

/// Splits a raw blog page into title, body and comments.
///
/// plain: line 1 is the title, the body follows the first blank line.
/// record: JSON object {"title", "body", "comments"?, "source_id"?}.
/// html: title from <title>, else the first <h1>; body is the text of <p>
/// elements outside comment regions, paragraphs joined by a blank line.
///
/// Throws Error with MalformedInput, MissingTitle or EmptyBody.
inline BlogDocument parse_document(std::string_view raw, InputFormat format,
                                   const ParseOptions& opts = {}) {
  using namespace ingestion_detail;
  raw = strip_bom(raw);
  if (raw.empty()) fail(ErrorKind::MalformedInput, opts.source_id, "input is empty");
  if (const auto bad = utf8::find_invalid(raw))
    fail(ErrorKind::MalformedInput, opts.source_id,
         "invalid UTF-8 at byte " + std::to_string(*bad));
  switch (format) {
    case InputFormat::Plain: return parse_plain(raw, opts);
    case InputFormat::Record: return parse_record(raw, opts);
    case InputFormat::Html: return parse_html(raw, opts);
  }
  fail(ErrorKind::MalformedInput, opts.source_id, "unknown input format");
}

/// Abbreviation handling for the segmenter. Entries are lowercase and carry
/// no trailing period.
struct SegmenterConfig {
  // A sentence may end at one of these only when an uppercase letter follows.
  std::vector<std::string> abbreviations{"etc", "i.e", "e.g", "vs", "cf", "viz", "al", "approx"};
  // Titles that precede a name; a sentence never ends at one of these.
  std::vector<std::string> name_titles{"dr", "mr", "mrs", "ms", "prof"};
  // Treat a single uppercase letter other than "I" followed by "." as an initial.
  bool initials = true;
};

namespace segment_detail {

inline bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

inline bool is_closer(char32_t cp) {
  return cp == U'"' || cp == U'\'' || cp == U')' || cp == U']' || cp == 0x2019 || cp == 0x201D;
}

inline bool is_opener(char32_t cp) {
  return cp == U'"' || cp == U'\'' || cp == U'(' || cp == U'[' || cp == 0x2018 || cp == 0x201C;
}

// The word immediately before a terminator with leading openers removed,
// folded to lowercase.
inline std::string preceding_word(std::string_view text, std::size_t word_start, std::size_t dot) {
  auto word = text.substr(word_start, dot - word_start);
  while (!word.empty()) {
    const auto d = utf8::decode(word, 0);
    if (!d || utf8::is_word_char(d->cp)) break;
    word.remove_prefix(d->length);
  }
  return utf8::fold(word);
}

inline bool contains(const std::vector<std::string>& list, std::string_view word) {
  return std::find(list.begin(), list.end(), word) != list.end();
}

struct Cut {
  std::size_t begin;
  std::size_t end;
};

// Sentence cut points inside one paragraph [begin, end).
inline void cut_paragraph(std::string_view body, std::size_t begin, std::size_t end,
                          const SegmenterConfig& cfg, std::vector<Cut>& cuts) {
  std::size_t sentence_start = begin;
  std::size_t word_start = begin;
  std::size_t pos = begin;
  while (pos < end) {
    const auto d = utf8::decode(body, pos);
    const char32_t cp = d ? d->cp : char32_t{0xFFFD};
    const std::size_t len = d ? d->length : 1;
    if (utf8::is_space(cp)) {
      pos += len;
      word_start = pos;
      continue;
    }
    if (!is_terminator(body[pos])) {
      pos += len;
      continue;
    }
    const std::size_t terminator = pos;
    std::size_t after = pos;
    while (after < end && is_terminator(body[after])) ++after;
    const bool single_period = after - terminator == 1 && body[terminator] == '.';
    while (after < end) {
      const auto c = utf8::decode(body, after);
      if (!c || !is_closer(c->cp)) break;
      after += c->length;
    }
    std::size_t next = after;
    while (next < end) {
      const auto c = utf8::decode(body, next);
      if (!c || !utf8::is_space(c->cp)) break;
      next += c->length;
    }
    bool cut = false;
    if (next >= end) {
      cut = true;
    } else if (next > after) {
      const char32_t following = utf8::decode(body, next)->cp;
      const bool upper = utf8::is_upper(following);
      const std::string word = preceding_word(body, word_start, terminator);
      if (single_period && contains(cfg.name_titles, word)) {
        cut = false;
      } else if (single_period && cfg.initials && word.size() == 1 && word != "i" &&
                 utf8::is_upper(utf8::decode(body, terminator - 1)->cp)) {
        cut = false;
      } else if (single_period && contains(cfg.abbreviations, word)) {
        cut = upper;
      } else {
        cut = upper || utf8::is_digit(following) || is_opener(following);
      }
    }
    if (cut) {
      cuts.push_back({sentence_start, after});
      sentence_start = after;
    }
    pos = after;
    word_start = after;
  }
  if (sentence_start < end) cuts.push_back({sentence_start, end});
}

}  // namespace segment_detail

/// Splits a post body into sentences in document order.
///
/// A sentence ends at a run of '.', '!' or '?' (plus closing quotes or
/// brackets) that is followed by the end of the body, or by whitespace and
/// then an uppercase letter, a digit, or an opening quote or bracket. After a
/// listed abbreviation only an uppercase letter ends the sentence; after a
/// name title or an initial it never ends. A blank line always ends a
/// sentence. Sentences are trimmed, and ones without a letter or digit are
/// dropped.
///
/// Throws Error(EmptyBody) when the body is blank.
inline SentenceSet segment_sentences(std::string_view body, const SegmenterConfig& cfg = {}) {
  using namespace segment_detail;
  if (utf8::is_blank(body)) throw Error(ErrorKind::EmptyBody, "body is empty");

  // Paragraphs are separated by lines that contain only whitespace.
  std::vector<Cut> cuts;
  std::size_t para_start = 0;
  std::size_t line_start = 0;
  bool prev_line_blank = false;
  while (line_start <= body.size()) {
    const auto nl = body.find('\n', line_start);
    const std::size_t line_end = nl == std::string_view::npos ? body.size() : nl;
    const bool blank = utf8::is_blank(body.substr(line_start, line_end - line_start));
    if (blank && !prev_line_blank && line_start > para_start)
      cut_paragraph(body, para_start, line_start, cfg, cuts);
    if (blank) para_start = line_end;
    prev_line_blank = blank;
    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
  }
  if (para_start < body.size()) cut_paragraph(body, para_start, body.size(), cfg, cuts);

  SentenceSet set;
  for (const auto& c : cuts) {
    const auto slice = body.substr(c.begin, c.end - c.begin);
    const auto trimmed = utf8::trim(slice);
    bool has_word = false;
    utf8::for_each(trimmed, [&](char32_t cp, std::size_t, std::size_t) {
      has_word = has_word || utf8::is_word_char(cp);
    });
    if (!has_word) continue;
    const std::size_t begin = c.begin + static_cast<std::size_t>(trimmed.data() - slice.data());
    set.sentences.push_back(
        Sentence{set.sentences.size() + 1, std::string(trimmed), Span{begin, begin + trimmed.size()}});
  }
  if (set.empty()) throw Error(ErrorKind::EmptyBody, "body has no sentence content");
  return set;
}

}  // namespace blogsum
