#pragma once

// Porter (1980) suffix-stripping stemmer, following Martin Porter's reference
// C implementation, including its three departures from the published
// description: words of one or two letters are returned unchanged, step 2 maps
// "bli" -> "ble" (instead of "abli" -> "able") and adds "logi" -> "log".

#include <algorithm>
#include <string>
#include <string_view>

namespace blogsum {

class PorterStemmer {
 public:
  /// Stems a lowercase a-z word. Words containing anything else are returned
  /// unchanged.
  std::string operator()(std::string_view word) const {
    if (!std::all_of(word.begin(), word.end(), [](char c) { return c >= 'a' && c <= 'z'; }))
      return std::string(word);
    State s{std::string(word), static_cast<int>(word.size()) - 1, 0};
    if (s.k <= 1) return s.b;
    step1ab(s);
    if (s.k > 0) {
      step1c(s);
      step2(s);
      step3(s);
      step4(s);
      step5(s);
    }
    s.b.resize(static_cast<std::size_t>(s.k) + 1);
    return s.b;
  }

 private:
  // b[0..k] is the current word, j marks the end of the stem once a suffix
  // has been matched by ends().
  struct State {
    std::string b;
    int k;
    int j;
  };

  static bool cons(const State& s, int i) {
    switch (s.b[static_cast<std::size_t>(i)]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u': return false;
      case 'y': return i == 0 ? true : !cons(s, i - 1);
      default: return true;
    }
  }

  // Number of VC sequences in b[0..j].
  static int measure(const State& s) {
    int n = 0;
    int i = 0;
    for (;; ++i) {
      if (i > s.j) return n;
      if (!cons(s, i)) break;
    }
    ++i;
    for (;;) {
      for (;; ++i) {
        if (i > s.j) return n;
        if (cons(s, i)) break;
      }
      ++i;
      ++n;
      for (;; ++i) {
        if (i > s.j) return n;
        if (!cons(s, i)) break;
      }
      ++i;
    }
  }

  static bool vowel_in_stem(const State& s) {
    for (int i = 0; i <= s.j; ++i)
      if (!cons(s, i)) return true;
    return false;
  }

  static bool double_consonant(const State& s, int i) {
    if (i < 1) return false;
    if (s.b[static_cast<std::size_t>(i)] != s.b[static_cast<std::size_t>(i - 1)]) return false;
    return cons(s, i);
  }

  // consonant-vowel-consonant ending at i, where the last consonant is not w, x or y.
  static bool cvc(const State& s, int i) {
    if (i < 2 || !cons(s, i) || cons(s, i - 1) || !cons(s, i - 2)) return false;
    const char ch = s.b[static_cast<std::size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  static bool ends(State& s, std::string_view suffix) {
    const int len = static_cast<int>(suffix.size());
    if (len > s.k + 1) return false;
    if (std::string_view(s.b).substr(static_cast<std::size_t>(s.k - len + 1), suffix.size()) !=
        suffix)
      return false;
    s.j = s.k - len;
    return true;
  }

  static void set_to(State& s, std::string_view replacement) {
    s.b.resize(static_cast<std::size_t>(s.j + 1));
    s.b.append(replacement);
    s.k = s.j + static_cast<int>(replacement.size());
  }

  static void replace_if_measured(State& s, std::string_view replacement) {
    if (measure(s) > 0) set_to(s, replacement);
  }

  char last(const State& s, int back = 0) const {
    return s.b[static_cast<std::size_t>(s.k - back)];
  }

  // Plurals and -ed / -ing.
  void step1ab(State& s) const {
    if (last(s) == 's') {
      if (ends(s, "sses")) {
        s.k -= 2;
      } else if (ends(s, "ies")) {
        set_to(s, "i");
      } else if (last(s, 1) != 's') {
        --s.k;
      }
    }
    if (ends(s, "eed")) {
      if (measure(s) > 0) --s.k;
    } else if ((ends(s, "ed") || ends(s, "ing")) && vowel_in_stem(s)) {
      s.k = s.j;
      if (ends(s, "at")) {
        set_to(s, "ate");
      } else if (ends(s, "bl")) {
        set_to(s, "ble");
      } else if (ends(s, "iz")) {
        set_to(s, "ize");
      } else if (double_consonant(s, s.k)) {
        --s.k;
        const char ch = last(s);
        if (ch == 'l' || ch == 's' || ch == 'z') ++s.k;
      } else {
        s.j = s.k;
        if (measure(s) == 1 && cvc(s, s.k)) set_to(s, "e");
      }
    }
    s.b.resize(static_cast<std::size_t>(s.k) + 1);
  }

  // Terminal y -> i when there is another vowel in the stem.
  void step1c(State& s) const {
    if (ends(s, "y") && vowel_in_stem(s)) s.b[static_cast<std::size_t>(s.k)] = 'i';
  }

  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
  };

  // First matching suffix wins, even when its measure condition fails.
  static void apply_first(State& s, std::initializer_list<Rule> rules) {
    for (const auto& rule : rules) {
      if (ends(s, rule.suffix)) {
        replace_if_measured(s, rule.replacement);
        return;
      }
    }
  }

  void step2(State& s) const {
    switch (last(s, 1)) {
      case 'a': apply_first(s, {{"ational", "ate"}, {"tional", "tion"}}); break;
      case 'c': apply_first(s, {{"enci", "ence"}, {"anci", "ance"}}); break;
      case 'e': apply_first(s, {{"izer", "ize"}}); break;
      case 'l':
        apply_first(s, {{"bli", "ble"}, {"alli", "al"}, {"entli", "ent"}, {"eli", "e"},
                        {"ousli", "ous"}});
        break;
      case 'o': apply_first(s, {{"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"}}); break;
      case 's':
        apply_first(s, {{"alism", "al"}, {"iveness", "ive"}, {"fulness", "ful"},
                        {"ousness", "ous"}});
        break;
      case 't': apply_first(s, {{"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}}); break;
      case 'g': apply_first(s, {{"logi", "log"}}); break;
      default: break;
    }
  }

  void step3(State& s) const {
    switch (last(s)) {
      case 'e': apply_first(s, {{"icate", "ic"}, {"ative", ""}, {"alize", "al"}}); break;
      case 'i': apply_first(s, {{"iciti", "ic"}}); break;
      case 'l': apply_first(s, {{"ical", "ic"}, {"ful", ""}}); break;
      case 's': apply_first(s, {{"ness", ""}}); break;
      default: break;
    }
  }

  // Strips a residual suffix when the remaining stem has measure > 1.
  void step4(State& s) const {
    bool matched = false;
    auto any = [&](std::initializer_list<std::string_view> suffixes) {
      for (auto suffix : suffixes)
        if (ends(s, suffix)) return true;
      return false;
    };
    switch (last(s, 1)) {
      case 'a': matched = any({"al"}); break;
      case 'c': matched = any({"ance", "ence"}); break;
      case 'e': matched = any({"er"}); break;
      case 'i': matched = any({"ic"}); break;
      case 'l': matched = any({"able", "ible"}); break;
      case 'n': matched = any({"ant", "ement", "ment", "ent"}); break;
      case 'o':
        if (ends(s, "ion") && s.j >= 0 &&
            (s.b[static_cast<std::size_t>(s.j)] == 's' || s.b[static_cast<std::size_t>(s.j)] == 't'))
          matched = true;
        else
          matched = ends(s, "ou");
        break;
      case 's': matched = any({"ism"}); break;
      case 't': matched = any({"ate", "iti"}); break;
      case 'u': matched = any({"ous"}); break;
      case 'v': matched = any({"ive"}); break;
      case 'z': matched = any({"ize"}); break;
      default: break;
    }
    if (matched && measure(s) > 1) s.k = s.j;
  }

  // Final -e and -ll.
  void step5(State& s) const {
    s.j = s.k;
    if (last(s) == 'e') {
      const int m = measure(s);
      if (m > 1 || (m == 1 && !cvc(s, s.k - 1))) --s.k;
    }
    if (last(s) == 'l' && double_consonant(s, s.k) && measure(s) > 1) --s.k;
  }
};

inline std::string porter_stem(std::string_view word) { return PorterStemmer{}(word); }

}  // namespace blogsum
