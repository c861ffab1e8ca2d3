// Linguistic features over TextStats: lexical statistics, Yule's I,
// seven readability indices and their mean, and lexicon-based sentiment.
//
// The word lists backing Dale-Chall difficulty and the sentiment polarity
// counts are versioned data (data/*.txt, embedded at build time via
// lexicon_data.hpp); editing them changes outputs.
#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "reprosig/common.hpp"
#include "reprosig/lexicon_data.hpp"
#include "reprosig/textstruct.hpp"

namespace reprosig {

using WordSet = std::unordered_set<std::string>;

struct Lexicons {
  WordSet easy_words;
  WordSet positive;
  WordSet negative;
};

/// Word lists shipped with the library (see data/ in the source tree).
inline const Lexicons& default_lexicons() {
  static const Lexicons lex = [] {
    Lexicons l;
    for (std::string_view w : detail::easy_word_list) l.easy_words.emplace(w);
    for (std::string_view w : detail::positive_word_list) l.positive.emplace(w);
    for (std::string_view w : detail::negative_word_list) l.negative.emplace(w);
    return l;
  }();
  return lex;
}

struct LexicalStats {
  int word_count = 0;
  double avg_word_length = 0;      // letters per word
  double avg_sentence_length = 0;  // words per sentence
  int n_words_gt_avg_len = 0;
  long long syllable_count = 0;
};

namespace detail {

inline int letter_length(std::string_view token) {
  int n = 0;
  for (char c : token)
    if (ascii::is_alpha(c)) ++n;
  return n;
}

}  // namespace detail

inline LexicalStats lexical_stats(const TextStats& stats) {
  if (stats.tokens.empty()) throw Error("no words");
  LexicalStats out;
  out.word_count = stats.word_count();
  out.avg_word_length =
      static_cast<double>(stats.letter_count) / out.word_count;
  out.avg_sentence_length =
      static_cast<double>(out.word_count) / stats.sentence_count();
  for (const std::string& tok : stats.tokens)
    if (detail::letter_length(tok) > out.avg_word_length)
      ++out.n_words_gt_avg_len;
  out.syllable_count = stats.syllable_count();
  return out;
}

/// Tokens with three or more syllables.
inline int complex_word_count(const TextStats& stats) {
  int n = 0;
  for (int s : stats.syllables_per_token)
    if (s >= 3) ++n;
  return n;
}

/// Yule's I lexical diversity: M1^2 / (M2 - M1) with M1 the vocabulary
/// size and M2 the sum of squared token frequencies. Returns nullopt
/// (infinite diversity) when every token is unique; that slot is treated
/// as a missing value by the statistics layer.
inline std::optional<double> yules_i(std::span<const std::string> tokens) {
  if (tokens.empty()) throw Error("yules_i: no tokens");
  std::unordered_map<std::string_view, long long> freq;
  for (const std::string& tok : tokens) ++freq[tok];
  long long m1 = static_cast<long long>(freq.size());
  long long m2 = 0;
  for (const auto& [tok, count] : freq) m2 += count * count;
  if (m2 == m1) return std::nullopt;
  return static_cast<double>(m1) * static_cast<double>(m1) /
         static_cast<double>(m2 - m1);
}

struct ReadabilityScores {
  double flesch_reading_ease = 0;
  double smog = 0;
  double coleman_liau = 0;
  double ari = 0;
  double dale_chall = 0;
  double linsear_write = 0;
  double gunning_fog = 0;
  double mean_readability = 0;
};

/// The seven readability indices on their native scales plus their
/// arithmetic mean. All are ratio-based, so repeating a document's
/// sentence list k times leaves every score unchanged.
inline ReadabilityScores readability(const TextStats& stats,
                                     const WordSet& easy_words) {
  const double W = stats.word_count();
  const double S = stats.sentence_count();
  if (W < 1 || S < 1)
    throw Error("readability requires at least one sentence and one word");
  const double Y = static_cast<double>(stats.syllable_count());
  const double C = complex_word_count(stats);
  const double L = static_cast<double>(stats.letter_count);

  ReadabilityScores r;
  r.flesch_reading_ease = 206.835 - 1.015 * (W / S) - 84.6 * (Y / W);
  r.smog = 1.0430 * std::sqrt(C * 30.0 / S) + 3.1291;
  r.coleman_liau =
      0.0588 * (100.0 * L / W) - 0.296 * (100.0 * S / W) - 15.8;
  r.ari = 4.71 * (L / W) + 0.5 * (W / S) - 21.43;

  long long difficult = 0;
  for (const std::string& tok : stats.tokens)
    if (!easy_words.contains(tok)) ++difficult;
  const double pct_difficult = 100.0 * static_cast<double>(difficult) / W;
  r.dale_chall = 0.1579 * pct_difficult + 0.0496 * (W / S) +
                 (pct_difficult > 5.0 ? 3.6365 : 0.0);

  // Linsear Write over the first 100 tokens (all of them for shorter
  // texts); the sentence denominator is the number of token-bearing
  // sentences that cover the sample.
  const int sample = stats.word_count() < 100 ? stats.word_count() : 100;
  int easy_lw = 0;
  for (int k = 0; k < sample; ++k)
    if (stats.syllables_per_token[k] <= 2) ++easy_lw;
  const int hard_lw = sample - easy_lw;
  int sample_sentences = 0;
  long long covered = 0;
  for (const std::string& sent : stats.sentences) {
    if (covered >= sample) break;
    size_t tokens_here = tokenize_words(sent).size();
    if (tokens_here == 0) continue;
    ++sample_sentences;
    covered += static_cast<long long>(tokens_here);
  }
  if (sample_sentences == 0) sample_sentences = 1;
  const double provisional =
      (easy_lw * 1.0 + hard_lw * 3.0) / sample_sentences;
  r.linsear_write =
      provisional > 20.0 ? provisional / 2.0 : provisional / 2.0 - 1.0;

  r.gunning_fog = 0.4 * ((W / S) + 100.0 * (C / W));
  r.mean_readability =
      (r.flesch_reading_ease + r.smog + r.coleman_liau + r.ari +
       r.dale_chall + r.linsear_write + r.gunning_fog) /
      7.0;
  return r;
}

struct SentimentResult {
  double score = 0.0;  // (P - N) / (P + N), 0 when no lexicon hits
  int label = 1;       // 1 iff score >= 0
};

inline SentimentResult sentiment_from_tokens(
    std::span<const std::string> tokens, const Lexicons& lexicons) {
  long long pos = 0;
  long long neg = 0;
  for (const std::string& tok : tokens) {
    if (lexicons.positive.contains(tok)) ++pos;
    if (lexicons.negative.contains(tok)) ++neg;
  }
  SentimentResult out;
  if (pos + neg > 0)
    out.score = static_cast<double>(pos - neg) / static_cast<double>(pos + neg);
  out.label = out.score >= 0.0 ? 1 : 0;
  return out;
}

/// Lexicon polarity of arbitrary text (used for titles and full articles).
inline SentimentResult sentiment(std::string_view text,
                                 const Lexicons& lexicons) {
  std::vector<std::string> tokens = tokenize_words(text);
  return sentiment_from_tokens(tokens, lexicons);
}

/// The full linguistic feature block for one article.
struct LinguisticFeatures {
  int word_count = 0;
  double avg_word_length = 0;
  double avg_sentence_length = 0;
  int n_words_gt_avg_len = 0;
  long long syllable_count = 0;
  int n_complex_words = 0;
  std::optional<double> yules_i;  // nullopt = infinite diversity
  double mean_readability = 0;
  int article_sentiment = 1;
  int title_sentiment = 1;
};

inline LinguisticFeatures build_linguistic_features(const TextStats& stats,
                                                    std::string_view title,
                                                    const Lexicons& lexicons) {
  LexicalStats lex = lexical_stats(stats);
  LinguisticFeatures f;
  f.word_count = lex.word_count;
  f.avg_word_length = lex.avg_word_length;
  f.avg_sentence_length = lex.avg_sentence_length;
  f.n_words_gt_avg_len = lex.n_words_gt_avg_len;
  f.syllable_count = lex.syllable_count;
  f.n_complex_words = complex_word_count(stats);
  f.yules_i = yules_i(stats.tokens);
  f.mean_readability = readability(stats, lexicons.easy_words).mean_readability;
  f.article_sentiment = sentiment_from_tokens(stats.tokens, lexicons).label;
  f.title_sentiment = sentiment(title, lexicons).label;
  return f;
}

}  // namespace reprosig
