// Text segmentation and structural feature extraction from plain article
// text. Everything here is a deterministic heuristic over the extracted
// text; no layout or PDF-object information is assumed. Page breaks are
// expected as form-feed characters when present.
#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "reprosig/common.hpp"

namespace reprosig {

/// Segmentation products for one document. tokens and syllables_per_token
/// are aligned; letter_count tallies alphabetic characters inside tokens,
/// char_count tallies non-whitespace code points of the raw text.
struct TextStats {
  std::vector<std::string> sentences;
  std::vector<std::string> tokens;
  std::vector<int> syllables_per_token;
  long long letter_count = 0;
  long long char_count = 0;

  int word_count() const { return static_cast<int>(tokens.size()); }
  int sentence_count() const { return static_cast<int>(sentences.size()); }
  long long syllable_count() const {
    long long total = 0;
    for (int s : syllables_per_token) total += s;
    return total;
  }
};

struct StructuralFeatures {
  bool has_introduction = false;
  bool has_methodology = false;
  bool has_results = false;
  int n_pages = 0;
  int n_images = 0;
  int n_tables = 0;
  int n_algorithms = 0;
  int n_hyperlinks = 0;
  int n_equations = 0;
};

namespace detail {

// Abbreviations whose trailing period does not end a sentence. Compared
// case-insensitively against the word before the period. Fixed list,
// shipped as part of the segmentation contract.
inline constexpr std::string_view kAbbreviations[] = {
    "al",  "approx", "cf",  "dr",   "e.g", "ed",  "eds",  "eq",  "eqs",
    "fig", "figs",   "i.e", "jr",   "mr",  "mrs", "ms",   "no",  "pp",
    "prof", "ref",   "refs", "resp", "sec", "secs", "sr",  "st",  "tab",
    "vol", "vs"};

inline bool is_abbreviation(std::string_view token) {
  std::string low = ascii::lower_copy(token);
  for (std::string_view a : kAbbreviations)
    if (low == a) return true;
  return false;
}

inline bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

inline bool is_closing(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']';
}

// U+2019 right single quote, the common apostrophe in extracted text.
inline bool is_curly_apostrophe(std::string_view s, size_t i) {
  return i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
         static_cast<unsigned char>(s[i + 1]) == 0x80 &&
         static_cast<unsigned char>(s[i + 2]) == 0x99;
}

}  // namespace detail

/// Splits text into sentences. A boundary is a '.', '!' or '?' followed
/// by whitespace and then an uppercase letter (or a line break, or end of
/// text). Periods after known abbreviations or after a single initial
/// followed by a capitalized word do not split. Text with no terminator
/// comes back as one sentence.
inline std::vector<std::string> segment_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  auto push = [&](size_t from, size_t to) {
    std::string_view s = ascii::trim(text.substr(from, to - from));
    if (!s.empty()) sentences.emplace_back(s);
  };

  size_t start = 0;
  const size_t n = text.size();
  for (size_t i = 0; i < n; ++i) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;

    if (c == '.') {
      // Word directly before the period; letters and embedded periods so
      // multi-part abbreviations like "e.g" survive.
      size_t b = i;
      while (b > start && (ascii::is_alpha(text[b - 1]) || text[b - 1] == '.'))
        --b;
      std::string_view token = text.substr(b, i - b);
      while (!token.empty() && token.front() == '.') token.remove_prefix(1);
      if (!token.empty()) {
        if (detail::is_abbreviation(token)) continue;
        if (token.size() == 1 && ascii::is_upper(token[0])) {
          // Single initial: treat "J. Smith" as one sentence but let a
          // lone trailing initial end its sentence.
          size_t k = i + 1;
          while (k < n && ascii::is_space(text[k])) ++k;
          size_t w = k;
          while (w < n && ascii::is_alpha(text[w])) ++w;
          if (w - k >= 2) continue;
        }
      }
    }

    size_t e = i + 1;
    while (e < n && detail::is_closing(text[e])) ++e;
    if (e >= n) {
      push(start, e);
      start = e;
      continue;
    }
    if (!ascii::is_space(text[e])) continue;
    size_t k = e;
    bool saw_newline = false;
    while (k < n && ascii::is_space(text[k])) {
      if (text[k] == '\n' || text[k] == '\f') saw_newline = true;
      ++k;
    }
    if (k >= n || saw_newline || ascii::is_upper(text[k])) {
      push(start, e);
      start = e;
    }
  }
  push(start, n);
  return sentences;
}

/// Lowercased word tokens: maximal alphabetic runs, keeping hyphens and
/// apostrophes that sit between letters. Digits and punctuation never
/// join a token. U+2019 is accepted as an apostrophe and normalized to '.
inline std::vector<std::string> tokenize_words(std::string_view text) {
  std::vector<std::string> tokens;
  const size_t n = text.size();
  size_t i = 0;
  while (i < n) {
    if (!ascii::is_alpha(text[i])) {
      ++i;
      continue;
    }
    std::string tok;
    while (i < n) {
      char c = text[i];
      if (ascii::is_alpha(c)) {
        tok += ascii::to_lower(c);
        ++i;
      } else if ((c == '-' || c == '\'') && i + 1 < n &&
                 ascii::is_alpha(text[i + 1])) {
        tok += c;
        ++i;
      } else if (detail::is_curly_apostrophe(text, i) && i + 3 < n &&
                 ascii::is_alpha(text[i + 3])) {
        tok += '\'';
        i += 3;
      } else {
        break;
      }
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

/// Heuristic syllable count: number of maximal vowel runs (a e i o u y),
/// minus a silent terminal "e" unless the word ends in "le" after a
/// consonant; never less than 1.
inline int count_syllables(std::string_view word) {
  int runs = 0;
  bool in_run = false;
  for (char c : word) {
    bool v = ascii::is_alpha(c) && detail::is_vowel(ascii::to_lower(c));
    if (v && !in_run) ++runs;
    in_run = v;
  }
  const size_t n = word.size();
  if (n >= 2 && ascii::to_lower(word[n - 1]) == 'e') {
    bool le_after_consonant =
        n >= 3 && ascii::to_lower(word[n - 2]) == 'l' &&
        ascii::is_alpha(word[n - 3]) &&
        !detail::is_vowel(ascii::to_lower(word[n - 3]));
    if (!le_after_consonant) --runs;
  }
  return runs < 1 ? 1 : runs;
}

struct SectionFlags {
  bool has_introduction = false;
  bool has_methodology = false;
  bool has_results = false;
};

namespace detail {

// Strips a leading section enumerator ("1", "3.2.", "IV)") and the
// whitespace after it; returns the remainder, or the input when no
// enumerator is present.
inline std::string_view strip_enumerator(std::string_view line) {
  size_t i = 0;
  const size_t n = line.size();
  if (i < n && ascii::is_digit(line[i])) {
    while (i < n && ascii::is_digit(line[i])) ++i;
    while (i + 1 < n && line[i] == '.' && ascii::is_digit(line[i + 1])) {
      ++i;
      while (i < n && ascii::is_digit(line[i])) ++i;
    }
    if (i < n && (line[i] == '.' || line[i] == ')')) ++i;
  } else {
    auto is_roman = [](char c) {
      c = ascii::to_lower(c);
      return c == 'i' || c == 'v' || c == 'x' || c == 'l' || c == 'c' ||
             c == 'd' || c == 'm';
    };
    size_t r = 0;
    while (r < n && is_roman(line[r])) ++r;
    if (r == 0) return line;
    size_t after = r;
    if (after < n && (line[after] == '.' || line[after] == ')')) ++after;
    if (after >= n || !ascii::is_space(line[after])) return line;
    i = after;
  }
  if (i >= n || !ascii::is_space(line[i])) return line;
  while (i < n && ascii::is_space(line[i])) ++i;
  return line.substr(i);
}

inline std::string normalize_heading(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (ascii::is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    out += ascii::to_lower(c);
  }
  if (!out.empty() && (out.back() == '.' || out.back() == ':'))
    out.pop_back();
  return out;
}

}  // namespace detail

/// Flags a section as present when some line (at most 60 characters)
/// consists of an optional enumerator plus one of the recognized heading
/// phrases, case-insensitive. Prose mentions do not count.
inline SectionFlags detect_sections(std::string_view text) {
  static constexpr std::string_view intro_names[] = {"introduction"};
  static constexpr std::string_view method_names[] = {
      "method", "methods", "methodology", "materials and methods"};
  static constexpr std::string_view result_names[] = {
      "result", "results", "experimental results"};

  SectionFlags flags;
  for (std::string_view line : split_lines(text)) {
    std::string_view t = ascii::trim(line);
    if (t.empty() || t.size() > 60) continue;
    std::string head = detail::normalize_heading(detail::strip_enumerator(t));
    auto matches = [&](auto& names) {
      for (std::string_view n : names)
        if (head == n) return true;
      return false;
    };
    if (matches(intro_names)) flags.has_introduction = true;
    if (matches(method_names)) flags.has_methodology = true;
    if (matches(result_names)) flags.has_results = true;
  }
  return flags;
}

enum class CaptionKind { table, figure, algorithm };

/// Counts distinct caption indices: lines beginning with the kind's
/// keyword ("Table", "Figure"/"Fig.", "Algorithm") followed by an
/// integer. The same index repeated (e.g. a caption echoed across pages)
/// counts once.
inline int count_captions(std::string_view text, CaptionKind kind) {
  std::vector<std::string_view> keywords;
  switch (kind) {
    case CaptionKind::table: keywords = {"table"}; break;
    case CaptionKind::figure: keywords = {"figure", "fig."}; break;
    case CaptionKind::algorithm: keywords = {"algorithm"}; break;
  }
  std::set<long> indices;
  for (std::string_view line : split_lines(text)) {
    std::string_view t = ascii::trim(line);
    if (t.empty()) continue;
    std::string low = ascii::lower_copy(t.substr(0, 16));
    for (std::string_view kw : keywords) {
      if (low.size() < kw.size() || std::string_view(low).substr(0, kw.size()) != kw)
        continue;
      size_t i = kw.size();
      while (i < t.size() && (t[i] == ' ' || t[i] == '\t')) ++i;
      size_t d = i;
      while (d < t.size() && ascii::is_digit(t[d]) && d - i < 9) ++d;
      if (d == i) continue;
      if (d < t.size()) {
        char after = t[d];
        if (!(ascii::is_space(after) || after == '.' || after == ':' ||
              after == ')' || after == ']' || after == ','))
          continue;
      }
      indices.insert(std::stol(std::string(t.substr(i, d - i))));
      break;
    }
  }
  return static_cast<int>(indices.size());
}

namespace detail {

inline bool url_body_char(char c) {
  if (ascii::is_alpha(c) || ascii::is_digit(c)) return true;
  static constexpr std::string_view extra = "-._~:/?#[]@!$&'()*+,;=%";
  return extra.find(c) != std::string_view::npos;
}

// Characters that, directly before "www." or "doi.org/", mean the match
// is the middle of a longer host or path rather than a URL start.
inline bool host_continuation_char(char c) {
  return ascii::is_alpha(c) || ascii::is_digit(c) || c == '.' || c == '-' ||
         c == '_' || c == '/' || c == ':';
}

inline bool match_icase(std::string_view text, size_t pos,
                        std::string_view pat) {
  if (pos + pat.size() > text.size()) return false;
  for (size_t k = 0; k < pat.size(); ++k)
    if (ascii::to_lower(text[pos + k]) != pat[k]) return false;
  return true;
}

// Collapses soft line wraps so a URL broken across lines scans as one
// run: a single line break joins directly after a hyphen and as a space
// otherwise; blank-line runs (and form feeds) stay hard breaks.
inline std::string unwrap_soft_breaks(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '\n' || c == '\f') {
      size_t j = i;
      int breaks = 0;
      while (j < n && ascii::is_space(text[j])) {
        if (text[j] == '\n' || text[j] == '\f') ++breaks;
        ++j;
      }
      bool hard = breaks >= 2 || j >= n;
      for (size_t k = i; !hard && k < j; ++k)
        if (text[k] == '\f') hard = true;
      if (hard) {
        out += '\n';
      } else if (out.empty() || out.back() != '-') {
        out += ' ';
      }
      i = j;
    } else {
      out += c;
      ++i;
    }
  }
  return out;
}

}  // namespace detail

/// Counts URL occurrences: http(s):// schemes, bare "www." hosts and
/// "doi.org/" references, matched case-insensitively and non-overlapping.
/// A URL wrapped across a single line break counts once.
inline int count_hyperlinks(std::string_view text) {
  const std::string unwrapped = detail::unwrap_soft_breaks(text);
  std::string_view s = unwrapped;
  const size_t n = s.size();
  int count = 0;
  size_t i = 0;
  auto consume = [&](size_t from) {
    while (from < n && detail::url_body_char(s[from])) ++from;
    return from;
  };
  while (i < n) {
    size_t scheme_len = 0;
    bool needs_boundary = false;
    if (detail::match_icase(s, i, "https://")) {
      scheme_len = 8;
    } else if (detail::match_icase(s, i, "http://")) {
      scheme_len = 7;
    } else if (detail::match_icase(s, i, "www.")) {
      scheme_len = 4;
      needs_boundary = true;
    } else if (detail::match_icase(s, i, "doi.org/")) {
      scheme_len = 8;
      needs_boundary = true;
    }
    if (scheme_len == 0) {
      ++i;
      continue;
    }
    if (needs_boundary && i > 0 && detail::host_continuation_char(s[i - 1])) {
      ++i;
      continue;
    }
    size_t body = i + scheme_len;
    if (body < n && detail::url_body_char(s[body])) {
      ++count;
      i = consume(body);
    } else {
      i = body;
    }
  }
  return count;
}

/// Counts distinct display-equation numbers: a line ending in a
/// standalone "(N)" whose remaining content carries at least one
/// mathematical operator or relation character.
inline int count_equations(std::string_view text) {
  static constexpr std::string_view operators[] = {
      "=", "<", ">", "+", "/",
      "\xE2\x88\x92",   // minus sign
      "\xE2\x89\x88",   // almost equal
      "\xE2\x89\xA4",   // less-or-equal
      "\xE2\x89\xA5",   // greater-or-equal
      "\xE2\x88\x91",   // n-ary summation
      "\xE2\x88\xAB"};  // integral
  std::set<long> numbers;
  for (std::string_view line : split_lines(text)) {
    std::string_view t = ascii::trim(line);
    if (t.size() < 3 || t.back() != ')') continue;
    size_t d = t.size() - 1;
    size_t digits_end = d;
    while (d > 0 && ascii::is_digit(t[d - 1])) --d;
    if (d == digits_end || d == 0 || t[d - 1] != '(') continue;
    if (digits_end - d > 9) continue;
    size_t paren = d - 1;
    if (paren > 0 && !ascii::is_space(t[paren - 1])) continue;
    std::string_view rest = t.substr(0, paren);
    bool has_op = false;
    for (std::string_view op : operators) {
      if (rest.find(op) != std::string_view::npos) {
        has_op = true;
        break;
      }
    }
    if (has_op) numbers.insert(std::stol(std::string(t.substr(d, digits_end - d))));
  }
  return static_cast<int>(numbers.size());
}

/// Page count: the manifest override when present, otherwise one more
/// than the number of form feeds; zero only for empty text.
inline int page_count(const std::optional<int>& n_pages_meta,
                      std::string_view text) {
  if (n_pages_meta) return *n_pages_meta;
  if (text.empty()) return 0;
  int feeds = 0;
  for (char c : text)
    if (c == '\f') ++feeds;
  return 1 + feeds;
}

/// Runs segmentation, tokenization and syllable counting over one text.
inline TextStats build_text_stats(std::string_view text) {
  TextStats stats;
  stats.sentences = segment_sentences(text);
  stats.tokens = tokenize_words(text);
  stats.syllables_per_token.reserve(stats.tokens.size());
  for (const std::string& tok : stats.tokens) {
    stats.syllables_per_token.push_back(count_syllables(tok));
    for (char c : tok)
      if (ascii::is_alpha(c)) ++stats.letter_count;
  }
  size_t i = 0;
  while (i < text.size()) {
    unsigned char b = static_cast<unsigned char>(text[i]);
    if (b < 0x80) {
      if (!ascii::is_space(text[i])) ++stats.char_count;
      ++i;
    } else {
      if ((b & 0xC0) != 0x80) ++stats.char_count;
      ++i;
      while (i < text.size() &&
             (static_cast<unsigned char>(text[i]) & 0xC0) == 0x80)
        ++i;
    }
  }
  return stats;
}

/// All structural features for one document.
inline StructuralFeatures extract_structural_features(
    std::string_view text, const std::optional<int>& n_pages_meta) {
  StructuralFeatures f;
  SectionFlags s = detect_sections(text);
  f.has_introduction = s.has_introduction;
  f.has_methodology = s.has_methodology;
  f.has_results = s.has_results;
  f.n_pages = page_count(n_pages_meta, text);
  f.n_images = count_captions(text, CaptionKind::figure);
  f.n_tables = count_captions(text, CaptionKind::table);
  f.n_algorithms = count_captions(text, CaptionKind::algorithm);
  f.n_hyperlinks = count_hyperlinks(text);
  f.n_equations = count_equations(text);
  return f;
}

}  // namespace reprosig
