// End-to-end pipeline: feature matrix assembly over a corpus, the
// significance battery, and report rendering.
//
// The matrix has a closed catalog of 13 numeric and 5 categorical
// features. Numeric features are tested with both point-biserial and
// Mann-Whitney U; categorical features with chi-squared on their 2x2
// table against the label. The significant set is drawn from the
// Mann-Whitney rows for numeric features and the chi-squared rows for
// categorical ones; point-biserial results are reported alongside.
#pragma once

#include <array>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "reprosig/common.hpp"
#include "reprosig/corpus.hpp"
#include "reprosig/lingfeat.hpp"
#include "reprosig/stats.hpp"
#include "reprosig/textstruct.hpp"

namespace reprosig {

inline constexpr std::array<std::string_view, 13> kNumericFeatures = {
    "word_count",      "avg_word_length", "n_words_gt_avg_len",
    "syllable_count",  "n_complex_words", "yules_i",
    "mean_readability", "n_images",       "n_tables",
    "n_algorithms",    "n_pages",         "n_hyperlinks",
    "n_equations"};

// The first 7 numeric features are linguistic, the remaining 6 structural.
inline constexpr size_t kLinguisticNumericCount = 7;

inline constexpr std::array<std::string_view, 5> kCategoricalFeatures = {
    "has_introduction", "has_methodology", "has_results",
    "article_sentiment", "title_sentiment"};

struct FeatureMatrix {
  std::vector<std::string> article_ids;
  std::vector<int> labels;
  std::array<std::vector<std::optional<double>>, 13> numeric;
  std::array<std::vector<std::optional<int>>, 5> categorical;
  std::vector<std::string> diagnostics;  // per article, empty when clean

  size_t n_articles() const { return article_ids.size(); }
};

namespace detail {

struct ArticleFeatureRow {
  std::array<std::optional<double>, 13> numeric;
  std::array<std::optional<int>, 5> categorical;
  std::string diagnostic;
};

inline void note_diagnostic(std::string& diag, std::string_view msg) {
  if (!diag.empty()) diag += "; ";
  diag += msg;
}

inline ArticleFeatureRow extract_article_features(const ArticleRecord& rec,
                                                  const Lexicons& lexicons) {
  ArticleFeatureRow row;
  std::string text;
  try {
    text = read_text(rec);
  } catch (const Error& e) {
    row.diagnostic = e.what();
    return row;
  }

  const StructuralFeatures sf = extract_structural_features(text, rec.n_pages);
  row.numeric[7] = sf.n_images;
  row.numeric[8] = sf.n_tables;
  row.numeric[9] = sf.n_algorithms;
  row.numeric[10] = sf.n_pages;
  row.numeric[11] = sf.n_hyperlinks;
  row.numeric[12] = sf.n_equations;
  row.categorical[0] = sf.has_introduction ? 1 : 0;
  row.categorical[1] = sf.has_methodology ? 1 : 0;
  row.categorical[2] = sf.has_results ? 1 : 0;

  try {
    const TextStats stats = build_text_stats(text);
    const LinguisticFeatures lf =
        build_linguistic_features(stats, rec.title, lexicons);
    row.numeric[0] = lf.word_count;
    row.numeric[1] = lf.avg_word_length;
    row.numeric[2] = lf.n_words_gt_avg_len;
    row.numeric[3] = static_cast<double>(lf.syllable_count);
    row.numeric[4] = lf.n_complex_words;
    if (lf.yules_i) {
      row.numeric[5] = *lf.yules_i;
    } else {
      note_diagnostic(row.diagnostic,
                      "yules_i: all tokens unique (infinite diversity)");
    }
    row.numeric[6] = lf.mean_readability;
    row.categorical[3] = lf.article_sentiment;
    row.categorical[4] = lf.title_sentiment;
  } catch (const Error& e) {
    note_diagnostic(row.diagnostic, e.what());
  }
  return row;
}

}  // namespace detail

/// Extracts every article's features. Rows keep the corpus's id order;
/// an article whose text cannot be processed yields an all-missing row
/// with a diagnostic rather than aborting the run. parallelism <= 1 runs
/// single-threaded; results are identical at any thread count.
inline FeatureMatrix build_feature_matrix(const Corpus& corpus,
                                          const Lexicons& lexicons,
                                          int parallelism = 1) {
  const size_t n = corpus.articles.size();
  std::vector<detail::ArticleFeatureRow> rows(n);

  int threads = parallelism;
  if (threads > static_cast<int>(n)) threads = static_cast<int>(n);
  if (threads > 1) {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        rows[i] = detail::extract_article_features(corpus.articles[i], lexicons);
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  } else {
    for (size_t i = 0; i < n; ++i)
      rows[i] = detail::extract_article_features(corpus.articles[i], lexicons);
  }

  FeatureMatrix m;
  m.article_ids.reserve(n);
  m.labels.reserve(n);
  m.diagnostics.reserve(n);
  for (auto& col : m.numeric) col.resize(n);
  for (auto& col : m.categorical) col.resize(n);
  for (size_t i = 0; i < n; ++i) {
    m.article_ids.push_back(corpus.articles[i].id);
    m.labels.push_back(static_cast<int>(corpus.articles[i].label));
    m.diagnostics.push_back(std::move(rows[i].diagnostic));
    for (size_t f = 0; f < m.numeric.size(); ++f)
      m.numeric[f][i] = rows[i].numeric[f];
    for (size_t f = 0; f < m.categorical.size(); ++f)
      m.categorical[f][i] = rows[i].categorical[f];
  }
  return m;
}

struct ReportRow {
  std::string feature;
  std::string test;  // point_biserial | mann_whitney_u | chi_squared
  std::optional<double> statistic;
  std::optional<double> p_value;
  int n_used = 0;
  std::string note;
};

struct SignificanceReport {
  double alpha = 0.05;
  std::vector<ReportRow> rows;
  std::vector<std::string> significant_set;
};

/// Runs the battery: both tests per numeric feature, chi-squared per
/// categorical feature, with pairwise deletion of missing cells. A
/// feature whose test cannot run (constant values, empty margin, ...)
/// keeps its row with the failure note and an absent p-value.
inline SignificanceReport run_significance_suite(const FeatureMatrix& matrix,
                                                 double alpha,
                                                 bool yates = true) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error("alpha must lie strictly between 0 and 1");
  bool saw[2] = {false, false};
  for (int l : matrix.labels) {
    if (l != 0 && l != 1) throw Error("labels must be 0 or 1");
    saw[l] = true;
  }
  if (!saw[0] || !saw[1])
    throw Error("degenerate corpus: both label classes are required");

  SignificanceReport report;
  report.alpha = alpha;

  for (size_t f = 0; f < kNumericFeatures.size(); ++f) {
    std::vector<double> values;
    std::vector<int> labels;
    std::vector<double> g1;
    std::vector<double> g0;
    for (size_t i = 0; i < matrix.n_articles(); ++i) {
      if (!matrix.numeric[f][i]) continue;
      values.push_back(*matrix.numeric[f][i]);
      labels.push_back(matrix.labels[i]);
      (matrix.labels[i] == 1 ? g1 : g0).push_back(*matrix.numeric[f][i]);
    }
    const int n_used = static_cast<int>(values.size());
    const std::string feature(kNumericFeatures[f]);

    ReportRow pb{feature, "point_biserial", {}, {}, n_used, ""};
    try {
      TestResult res = point_biserial(values, labels);
      pb.statistic = res.statistic;
      pb.p_value = res.p_value;
      pb.note = res.method_note;
    } catch (const Error& e) {
      pb.note = std::string("untestable: ") + e.what();
    }
    report.rows.push_back(std::move(pb));

    ReportRow mwu{feature, "mann_whitney_u", {}, {}, n_used, ""};
    try {
      TestResult res = mann_whitney_u(g1, g0);
      mwu.statistic = res.statistic;
      mwu.p_value = res.p_value;
      mwu.note = res.method_note;
      if (res.p_value < alpha) report.significant_set.push_back(feature);
    } catch (const Error& e) {
      mwu.note = std::string("untestable: ") + e.what();
    }
    report.rows.push_back(std::move(mwu));
  }

  for (size_t f = 0; f < kCategoricalFeatures.size(); ++f) {
    ContingencyTable table;
    table.rows[0] = {0, 0};
    table.rows[1] = {0, 0};
    int n_used = 0;
    for (size_t i = 0; i < matrix.n_articles(); ++i) {
      if (!matrix.categorical[f][i]) continue;
      const int v = *matrix.categorical[f][i];
      if (v != 0 && v != 1) throw Error("categorical cells must be 0 or 1");
      table.rows[static_cast<size_t>(matrix.labels[i])][static_cast<size_t>(v)]++;
      ++n_used;
    }
    const std::string feature(kCategoricalFeatures[f]);
    ReportRow row{feature, "chi_squared", {}, {}, n_used, ""};
    try {
      TestResult res = chi_squared(table, yates);
      row.statistic = res.statistic;
      row.p_value = res.p_value;
      row.note = res.method_note;
      if (res.p_value < alpha) report.significant_set.push_back(feature);
    } catch (const Error& e) {
      row.note = std::string("untestable: ") + e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

struct ReportFormats {
  bool markdown = true;
  bool csv = true;
  bool json = true;
};

namespace detail {

inline std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

inline std::string shortest_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

inline void write_file(const std::filesystem::path& path,
                       std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("write failure: " + path.string());
}

inline std::string markdown_table(const std::vector<const ReportRow*>& rows) {
  std::string out = "| Feature | p-value |\n| --- | --- |\n";
  for (const ReportRow* r : rows) {
    out += "| " + r->feature + " | " +
           (r->p_value ? fixed4(*r->p_value) : std::string("n/a")) + " |\n";
  }
  return out;
}

inline std::string csv_table(const std::vector<const ReportRow*>& rows) {
  std::string out = "feature,test,statistic,p_value,n_used,note\n";
  for (const ReportRow* r : rows) {
    csv::Row fields{r->feature,
                    r->test,
                    r->statistic ? fixed4(*r->statistic) : "",
                    r->p_value ? fixed4(*r->p_value) : "",
                    std::to_string(r->n_used),
                    r->note};
    out += csv::format_row(fields);
  }
  return out;
}

inline bool is_structural_numeric(std::string_view feature) {
  for (size_t f = kLinguisticNumericCount; f < kNumericFeatures.size(); ++f)
    if (feature == kNumericFeatures[f]) return true;
  return false;
}

}  // namespace detail

/// Writes the report tables into out_dir:
///   structural_pb.{md,csv}, linguistic_pb.{md,csv},
///   numeric_mwu.{md,csv}, categorical_chi2.{md,csv}, summary.json
/// p-values render at 4 decimals in the tables; summary.json carries
/// full precision. Output is byte-deterministic for a given report.
inline void render_report(const SignificanceReport& report,
                          const ReportFormats& formats,
                          const std::filesystem::path& out_dir) {
  if (report.rows.empty()) throw Error("render_report: empty report");
  std::filesystem::create_directories(out_dir);

  std::vector<const ReportRow*> structural_pb;
  std::vector<const ReportRow*> linguistic_pb;
  std::vector<const ReportRow*> numeric_mwu;
  std::vector<const ReportRow*> categorical_chi2;
  for (const ReportRow& r : report.rows) {
    if (r.test == "point_biserial") {
      (detail::is_structural_numeric(r.feature) ? structural_pb
                                                : linguistic_pb)
          .push_back(&r);
    } else if (r.test == "mann_whitney_u") {
      numeric_mwu.push_back(&r);
    } else if (r.test == "chi_squared") {
      categorical_chi2.push_back(&r);
    }
  }

  const std::pair<std::string, std::vector<const ReportRow*>*> tables[] = {
      {"structural_pb", &structural_pb},
      {"linguistic_pb", &linguistic_pb},
      {"numeric_mwu", &numeric_mwu},
      {"categorical_chi2", &categorical_chi2}};
  for (const auto& [name, rows] : tables) {
    if (formats.markdown)
      detail::write_file(out_dir / (name + ".md"), detail::markdown_table(*rows));
    if (formats.csv)
      detail::write_file(out_dir / (name + ".csv"), detail::csv_table(*rows));
  }

  if (formats.json) {
    nlohmann::ordered_json doc;
    doc["alpha"] = report.alpha;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const ReportRow& r : report.rows) {
      nlohmann::ordered_json row;
      row["feature"] = r.feature;
      row["test"] = r.test;
      if (r.statistic)
        row["statistic"] = *r.statistic;
      else
        row["statistic"] = nullptr;
      if (r.p_value)
        row["p"] = *r.p_value;
      else
        row["p"] = nullptr;
      row["n"] = r.n_used;
      if (!r.note.empty()) row["note"] = r.note;
      doc["rows"].push_back(std::move(row));
    }
    doc["significant"] = report.significant_set;
    detail::write_file(out_dir / "summary.json", doc.dump(2) + "\n");
  }
}

namespace detail {

inline std::string features_csv_header() {
  std::string h = "article_id,label";
  for (std::string_view f : kNumericFeatures) {
    h += ',';
    h += f;
  }
  for (std::string_view f : kCategoricalFeatures) {
    h += ',';
    h += f;
  }
  return h;
}

}  // namespace detail

/// Full matrix as CSV: article_id, label, the 13 numeric and 5
/// categorical features; missing cells are empty. Doubles use the
/// shortest round-trip form, so reading the file back is lossless.
inline std::string features_to_csv(const FeatureMatrix& matrix) {
  std::string out = detail::features_csv_header();
  out += '\n';
  for (size_t i = 0; i < matrix.n_articles(); ++i) {
    csv::Row row;
    row.push_back(matrix.article_ids[i]);
    row.push_back(std::to_string(matrix.labels[i]));
    for (const auto& col : matrix.numeric)
      row.push_back(col[i] ? detail::shortest_double(*col[i]) : "");
    for (const auto& col : matrix.categorical)
      row.push_back(col[i] ? std::to_string(*col[i]) : "");
    out += csv::format_row(row);
  }
  return out;
}

inline void write_features_csv(const FeatureMatrix& matrix,
                               const std::filesystem::path& path) {
  detail::write_file(path, features_to_csv(matrix));
}

inline FeatureMatrix read_features_csv(const std::filesystem::path& path) {
  std::string raw = detail::read_file_bytes(path);
  std::vector<csv::Row> rows = csv::parse(raw);
  if (rows.empty()) throw Error("features file is empty: " + path.string());
  {
    std::string header;
    for (size_t i = 0; i < rows[0].size(); ++i) {
      if (i) header += ',';
      header += rows[0][i];
    }
    if (header != detail::features_csv_header())
      throw Error("unexpected features header in " + path.string());
  }
  const size_t n_cols = 2 + kNumericFeatures.size() + kCategoricalFeatures.size();
  FeatureMatrix m;
  const size_t n = rows.size() - 1;
  for (auto& col : m.numeric) col.resize(n);
  for (auto& col : m.categorical) col.resize(n);
  m.diagnostics.resize(n);
  for (size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    if (row.size() != n_cols)
      throw Error("features row " + std::to_string(r + 1) + ": expected " +
                  std::to_string(n_cols) + " fields, got " +
                  std::to_string(row.size()));
    const size_t i = r - 1;
    m.article_ids.push_back(row[0]);
    if (row[1] != "0" && row[1] != "1")
      throw Error("features row " + std::to_string(r + 1) +
                  ": label must be 0 or 1");
    m.labels.push_back(row[1] == "1" ? 1 : 0);
    for (size_t f = 0; f < kNumericFeatures.size(); ++f) {
      const std::string& cell = row[2 + f];
      if (cell.empty()) continue;
      double v = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size())
        throw Error("features row " + std::to_string(r + 1) +
                    ": bad numeric cell \"" + cell + "\"");
      m.numeric[f][i] = v;
    }
    for (size_t f = 0; f < kCategoricalFeatures.size(); ++f) {
      const std::string& cell = row[2 + kNumericFeatures.size() + f];
      if (cell.empty()) continue;
      if (cell != "0" && cell != "1")
        throw Error("features row " + std::to_string(r + 1) +
                    ": bad categorical cell \"" + cell + "\"");
      m.categorical[f][i] = cell == "1" ? 1 : 0;
    }
  }
  return m;
}

}  // namespace reprosig
