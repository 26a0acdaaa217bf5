#pragma once

// Small forgiving HTML scanner that pulls out what the summarizer needs from a
// blog page: the <title>, the first <h1>, the text of <p> elements, and the
// text of comment regions. It tolerates unclosed paragraphs and stray end
// tags; it does not build a DOM.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blogsum/utf8.hpp"

namespace blogsum {

/// Marks comment regions. `needle` is matched case-insensitively as a
/// substring of the id attribute, the class attribute, or both.
struct CommentSelector {
  enum class Attribute { IdOrClass, Id, Class };

  std::string needle = "comment";
  Attribute attribute = Attribute::IdOrClass;

  /// "#x" restricts to ids, ".x" to classes, anything else matches both.
  static CommentSelector parse(std::string_view text) {
    CommentSelector sel;
    sel.attribute = Attribute::IdOrClass;
    if (!text.empty() && text.front() == '#') {
      sel.attribute = Attribute::Id;
      text.remove_prefix(1);
    } else if (!text.empty() && text.front() == '.') {
      sel.attribute = Attribute::Class;
      text.remove_prefix(1);
    }
    sel.needle = utf8::fold(text);
    return sel;
  }

  bool matches(std::string_view id, std::string_view cls) const {
    if (needle.empty()) return false;
    auto has = [&](std::string_view value) {
      return utf8::fold(value).find(needle) != std::string::npos;
    };
    switch (attribute) {
      case Attribute::Id: return has(id);
      case Attribute::Class: return has(cls);
      case Attribute::IdOrClass: return has(id) || has(cls);
    }
    return false;
  }
};

struct HtmlExtraction {
  std::optional<std::string> title;     // <title> text, whitespace-collapsed
  std::optional<std::string> first_h1;  // first <h1> outside comment regions
  std::vector<std::string> paragraphs;  // <p> text outside comment regions
  std::vector<std::string> comments;
};

namespace html_detail {

inline char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c; }

inline std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), ascii_lower);
  return out;
}

inline bool istarts_with(std::string_view s, std::size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > s.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (ascii_lower(s[pos + i]) != prefix[i]) return false;
  return true;
}

inline std::size_t ifind(std::string_view s, std::size_t pos, std::string_view needle) {
  for (; pos + needle.size() <= s.size(); ++pos)
    if (istarts_with(s, pos, needle)) return pos;
  return std::string_view::npos;
}

struct NamedEntity {
  std::string_view name;
  char32_t cp;
};

inline constexpr NamedEntity kEntities[] = {
    {"amp", U'&'},     {"lt", U'<'},      {"gt", U'>'},      {"quot", U'"'},
    {"apos", U'\''},   {"nbsp", 0xA0},    {"lsquo", 0x2018}, {"rsquo", 0x2019},
    {"ldquo", 0x201C}, {"rdquo", 0x201D}, {"ndash", 0x2013}, {"mdash", 0x2014},
    {"hellip", 0x2026}, {"copy", 0xA9},   {"reg", 0xAE},     {"trade", 0x2122},
    {"laquo", 0xAB},   {"raquo", 0xBB},   {"eacute", 0xE9},  {"egrave", 0xE8},
    {"aacute", 0xE1},  {"agrave", 0xE0},  {"uuml", 0xFC},    {"ouml", 0xF6},
    {"auml", 0xE4},    {"ccedil", 0xE7},  {"szlig", 0xDF},   {"middot", 0xB7},
    {"bull", 0x2022},
};

/// Decodes character references; unknown or malformed references are kept
/// verbatim.
inline std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    const auto semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back(s[i++]);
      continue;
    }
    const auto ref = s.substr(i + 1, semi - i - 1);
    std::optional<char32_t> cp;
    if (ref.size() > 1 && ref[0] == '#') {
      const bool hex = ref[1] == 'x' || ref[1] == 'X';
      const auto digits = ref.substr(hex ? 2 : 1);
      std::uint32_t value = 0;
      bool ok = !digits.empty();
      for (char c : digits) {
        int d = -1;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (hex && c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') d = c - 'A' + 10;
        if (d < 0 || value > 0x10FFFF) {
          ok = false;
          break;
        }
        value = value * (hex ? 16 : 10) + static_cast<std::uint32_t>(d);
      }
      if (ok && value > 0 && value <= 0x10FFFF && !(value >= 0xD800 && value <= 0xDFFF))
        cp = static_cast<char32_t>(value);
    } else {
      for (const auto& e : kEntities)
        if (e.name == ref) cp = e.cp;
    }
    if (!cp) {
      out.push_back(s[i++]);
      continue;
    }
    utf8::append(out, *cp);
    i = semi + 1;
  }
  return out;
}

inline bool is_void(std::string_view name) {
  static constexpr std::string_view kVoid[] = {"area", "base", "br",   "col",   "embed",
                                               "hr",   "img",  "input", "link", "meta",
                                               "param", "source", "track", "wbr"};
  return std::find(std::begin(kVoid), std::end(kVoid), name) != std::end(kVoid);
}

// Opening one of these implicitly ends an open <p>.
inline bool closes_paragraph(std::string_view name) {
  static constexpr std::string_view kBlock[] = {
      "address", "article", "aside", "blockquote", "div",    "dl",     "fieldset", "footer",
      "form",    "h1",      "h2",    "h3",         "h4",     "h5",     "h6",       "header",
      "hr",      "main",    "nav",   "ol",         "p",      "pre",    "section",  "table",
      "ul",      "figure",  "li"};
  return std::find(std::begin(kBlock), std::end(kBlock), name) != std::end(kBlock);
}

// Text-producing structure: block boundaries become whitespace.
inline bool is_block(std::string_view name) {
  return closes_paragraph(name) || name == "br" || name == "td" || name == "th" ||
         name == "tr" || name == "dt" || name == "dd" || name == "title";
}

struct Tag {
  std::string name;  // lowercase
  bool closing = false;
  bool self_closing = false;
  std::string id;
  std::string cls;
  std::size_t end = 0;  // one past '>'
};

inline bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '-' || c == '_' || c == ':';
}

inline bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

/// Parses a tag starting at `pos` (which holds '<'). Returns nullopt when the
/// '<' does not start a tag, in which case it is ordinary text.
inline std::optional<Tag> parse_tag(std::string_view s, std::size_t pos) {
  Tag tag;
  std::size_t i = pos + 1;
  if (i < s.size() && s[i] == '/') {
    tag.closing = true;
    ++i;
  }
  if (i >= s.size() || !((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= 'A' && s[i] <= 'Z')))
    return std::nullopt;
  const std::size_t name_start = i;
  while (i < s.size() && is_name_char(s[i])) ++i;
  tag.name = lower(s.substr(name_start, i - name_start));
  while (i < s.size() && s[i] != '>') {
    if (is_ws(s[i])) {
      ++i;
      continue;
    }
    if (s[i] == '/') {
      tag.self_closing = true;
      ++i;
      continue;
    }
    tag.self_closing = false;
    const std::size_t attr_start = i;
    while (i < s.size() && !is_ws(s[i]) && s[i] != '=' && s[i] != '>' && s[i] != '/') ++i;
    const std::string attr = lower(s.substr(attr_start, i - attr_start));
    if (attr.empty()) {
      ++i;
      continue;
    }
    while (i < s.size() && is_ws(s[i])) ++i;
    std::string value;
    if (i < s.size() && s[i] == '=') {
      ++i;
      while (i < s.size() && is_ws(s[i])) ++i;
      if (i < s.size() && (s[i] == '"' || s[i] == '\'')) {
        const char quote = s[i++];
        const auto close = s.find(quote, i);
        if (close == std::string_view::npos) return std::nullopt;
        value = std::string(s.substr(i, close - i));
        i = close + 1;
      } else {
        const std::size_t v = i;
        while (i < s.size() && !is_ws(s[i]) && s[i] != '>') ++i;
        value = std::string(s.substr(v, i - v));
      }
    }
    if (attr == "id") tag.id = decode_entities(value);
    if (attr == "class") tag.cls = decode_entities(value);
  }
  if (i >= s.size()) return std::nullopt;
  tag.end = i + 1;
  return tag;
}

}  // namespace html_detail

inline HtmlExtraction extract_html(std::string_view s, const CommentSelector& selector = {}) {
  using namespace html_detail;

  struct Open {
    std::string name;
    bool comment_region;
  };
  HtmlExtraction out;
  std::vector<Open> stack;
  std::size_t comment_depth = 0;  // open elements that matched the selector

  bool in_paragraph = false;
  bool paragraph_in_comment = false;
  std::string paragraph;

  bool in_h1 = false;
  std::string h1;

  std::string region_text;  // text of the outermost open comment region
  bool region_had_paragraph = false;

  auto emit_text = [&](std::string_view text) {
    if (in_paragraph) paragraph.append(text);
    if (in_h1) h1.append(text);
    if (comment_depth > 0) region_text.append(text);
  };

  auto finish_paragraph = [&] {
    if (!in_paragraph) return;
    auto text = utf8::collapse_whitespace(paragraph);
    if (!text.empty()) {
      if (paragraph_in_comment) {
        out.comments.push_back(std::move(text));
        region_had_paragraph = true;
      } else {
        out.paragraphs.push_back(std::move(text));
      }
    }
    paragraph.clear();
    in_paragraph = false;
  };

  auto finish_h1 = [&] {
    if (!in_h1) return;
    auto text = utf8::collapse_whitespace(h1);
    if (!out.first_h1 && !text.empty()) out.first_h1 = std::move(text);
    h1.clear();
    in_h1 = false;
  };

  auto finish_region = [&] {
    if (!region_had_paragraph) {
      auto text = utf8::collapse_whitespace(region_text);
      if (!text.empty()) out.comments.push_back(std::move(text));
    }
    region_text.clear();
    region_had_paragraph = false;
  };

  auto pop = [&] {
    const Open& top = stack.back();
    if (top.name == "p") finish_paragraph();
    if (top.name == "h1") finish_h1();
    if (top.comment_region) {
      --comment_depth;
      if (comment_depth == 0) finish_region();
    }
    stack.pop_back();
  };

  auto close_element = [&](std::string_view name) {
    const auto it = std::find_if(stack.rbegin(), stack.rend(),
                                 [&](const Open& o) { return o.name == name; });
    if (it == stack.rend()) return false;
    const auto depth = static_cast<std::size_t>(std::distance(it, stack.rend()));
    while (stack.size() >= depth) pop();
    return true;
  };

  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '<') {
      const auto next = s.find('<', pos);
      const auto end = next == std::string_view::npos ? s.size() : next;
      emit_text(decode_entities(s.substr(pos, end - pos)));
      pos = end;
      continue;
    }
    if (s.substr(pos, 4) == "<!--") {
      const auto end = s.find("-->", pos + 4);
      pos = end == std::string_view::npos ? s.size() : end + 3;
      continue;
    }
    if (pos + 1 < s.size() && (s[pos + 1] == '!' || s[pos + 1] == '?')) {
      const auto end = s.find('>', pos);
      pos = end == std::string_view::npos ? s.size() : end + 1;
      continue;
    }
    const auto tag = parse_tag(s, pos);
    if (!tag) {
      emit_text("<");
      ++pos;
      continue;
    }
    pos = tag->end;

    if (tag->closing) {
      if (is_block(tag->name)) emit_text(" ");
      if (tag->name == "p" && !close_element("p") && in_paragraph) finish_paragraph();
      else if (tag->name != "p") close_element(tag->name);
      continue;
    }

    if (tag->name == "script" || tag->name == "style" || tag->name == "title" ||
        tag->name == "textarea") {
      const std::string terminator = "</" + tag->name;
      const auto end = ifind(s, pos, terminator);
      const auto content_end = end == std::string_view::npos ? s.size() : end;
      if (tag->name == "title" && !out.title) {
        auto title = utf8::collapse_whitespace(decode_entities(s.substr(pos, content_end - pos)));
        if (!title.empty()) out.title = std::move(title);
      }
      if (end == std::string_view::npos) {
        pos = s.size();
      } else {
        const auto gt = s.find('>', end);
        pos = gt == std::string_view::npos ? s.size() : gt + 1;
      }
      continue;
    }

    if (closes_paragraph(tag->name) && in_paragraph) close_element("p");
    if (is_block(tag->name)) emit_text(" ");
    if (is_void(tag->name) || tag->self_closing) continue;

    const bool region = selector.matches(tag->id, tag->cls);
    stack.push_back({tag->name, region});
    if (region) ++comment_depth;
    if (tag->name == "p") {
      finish_paragraph();
      in_paragraph = true;
      paragraph_in_comment = comment_depth > 0;
    } else if (tag->name == "h1" && comment_depth == 0 && !out.first_h1) {
      in_h1 = true;
    }
  }
  while (!stack.empty()) pop();
  finish_paragraph();
  finish_h1();
  return out;
}

}  // namespace blogsum
