// Labeled-corpus data model: manifest parsing and validation, article
// text loading.
//
// Manifest format: UTF-8 CSV with header exactly
//   id,title,label,source,text_path,n_pages
// label is 0 (irreproducible) or 1 (reproducible); source is one of
// brown, retraction_db, acm_badged, other; n_pages is empty or a positive
// integer. Relative text paths resolve against the manifest's directory.
#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "reprosig/common.hpp"
#include "reprosig/csv.hpp"

namespace reprosig {

enum class Label : int { irreproducible = 0, reproducible = 1 };

enum class Source : int { brown = 0, retraction_db = 1, acm_badged = 2, other = 3 };

inline constexpr std::string_view kManifestHeader =
    "id,title,label,source,text_path,n_pages";

inline std::string_view to_string(Source s) {
  switch (s) {
    case Source::brown: return "brown";
    case Source::retraction_db: return "retraction_db";
    case Source::acm_badged: return "acm_badged";
    case Source::other: return "other";
  }
  return "other";
}

inline std::optional<Source> parse_source(std::string_view token) {
  if (token == "brown") return Source::brown;
  if (token == "retraction_db") return Source::retraction_db;
  if (token == "acm_badged") return Source::acm_badged;
  if (token == "other") return Source::other;
  return std::nullopt;
}

struct ArticleRecord {
  std::string id;
  std::string title;
  Label label = Label::irreproducible;
  Source source = Source::other;
  std::filesystem::path text_path;
  std::optional<int> n_pages;

  bool operator==(const ArticleRecord&) const = default;
};

struct Corpus {
  std::vector<ArticleRecord> articles;  // sorted by id
  std::array<int, 2> label_counts{};    // indexed by label value
  std::array<int, 4> source_counts{};   // indexed by source value

  int size() const { return static_cast<int>(articles.size()); }
  int count(Label l) const { return label_counts[static_cast<int>(l)]; }
  int count(Source s) const { return source_counts[static_cast<int>(s)]; }

  bool operator==(const Corpus&) const = default;
};

namespace detail {

inline std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("read failure: " + path.string());
  return std::move(buf).str();
}

}  // namespace detail

/// Full article text, bytes preserved (form feeds and line endings
/// included). Rejects empty files and malformed UTF-8.
inline std::string read_text(const ArticleRecord& record) {
  std::string text = detail::read_file_bytes(record.text_path);
  if (text.empty()) throw Error("empty text: " + record.text_path.string());
  if (!valid_utf8(text))
    throw Error("invalid UTF-8: " + record.text_path.string());
  return text;
}

/// Loads and validates a manifest. All row-level problems are collected
/// and reported together; any problem fails the load. Articles come back
/// sorted by id so downstream output is deterministic.
inline Corpus load_manifest(const std::filesystem::path& manifest_path) {
  std::string raw = detail::read_file_bytes(manifest_path);
  if (!valid_utf8(raw))
    throw Error("manifest is not valid UTF-8: " + manifest_path.string());
  std::vector<csv::Row> rows = csv::parse(raw);
  if (rows.empty()) throw Error("manifest is empty: " + manifest_path.string());

  {
    std::string header;
    for (size_t i = 0; i < rows[0].size(); ++i) {
      if (i) header += ',';
      header += rows[0][i];
    }
    if (header != kManifestHeader)
      throw Error("manifest header must be exactly '" +
                  std::string(kManifestHeader) + "', got '" + header + "'");
  }

  const std::filesystem::path base = manifest_path.parent_path();
  Corpus corpus;
  std::vector<std::string> problems;
  std::unordered_set<std::string> seen_ids;
  auto complain = [&](size_t row_no, const std::string& msg) {
    problems.push_back("manifest row " + std::to_string(row_no) + ": " + msg);
  };

  for (size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    const size_t row_no = r + 1;  // 1-based, header is row 1
    if (row.size() != 6) {
      complain(row_no, "expected 6 fields, got " + std::to_string(row.size()));
      continue;
    }
    ArticleRecord rec;
    rec.id = row[0];
    rec.title = row[1];
    bool ok = true;

    if (rec.id.empty()) {
      complain(row_no, "empty id");
      ok = false;
    } else if (!seen_ids.insert(rec.id).second) {
      complain(row_no, "duplicate id \"" + rec.id + "\"");
      ok = false;
    }

    if (row[2] == "0") {
      rec.label = Label::irreproducible;
    } else if (row[2] == "1") {
      rec.label = Label::reproducible;
    } else {
      complain(row_no, "unknown label token \"" + row[2] + "\" (want 0 or 1)");
      ok = false;
    }

    if (auto src = parse_source(row[3])) {
      rec.source = *src;
    } else {
      complain(row_no, "unknown source \"" + row[3] + "\"");
      ok = false;
    }

    if (row[4].empty()) {
      complain(row_no, "empty text_path");
      ok = false;
    } else {
      std::filesystem::path p(row[4]);
      rec.text_path = p.is_absolute() ? p : base / p;
    }

    if (!row[5].empty()) {
      int pages = 0;
      bool numeric = !row[5].empty() &&
                     std::all_of(row[5].begin(), row[5].end(), ascii::is_digit);
      if (numeric) {
        try {
          pages = std::stoi(row[5]);
        } catch (const std::exception&) {
          numeric = false;
        }
      }
      if (!numeric || pages <= 0) {
        complain(row_no, "n_pages must be a positive integer, got \"" +
                             row[5] + "\"");
        ok = false;
      } else {
        rec.n_pages = pages;
      }
    }

    if (ok && !rec.text_path.empty()) {
      try {
        read_text(rec);  // readable, nonempty, valid UTF-8
      } catch (const Error& e) {
        complain(row_no, e.what());
        ok = false;
      }
    }
    if (ok) corpus.articles.push_back(std::move(rec));
  }

  if (!problems.empty()) {
    std::string joined;
    for (const std::string& p : problems) {
      if (!joined.empty()) joined += '\n';
      joined += p;
    }
    throw Error(joined);
  }

  std::sort(corpus.articles.begin(), corpus.articles.end(),
            [](const ArticleRecord& a, const ArticleRecord& b) {
              return a.id < b.id;
            });
  for (const ArticleRecord& rec : corpus.articles) {
    corpus.label_counts[static_cast<int>(rec.label)]++;
    corpus.source_counts[static_cast<int>(rec.source)]++;
  }
  return corpus;
}

/// Serializes back to manifest CSV (header + one row per article, in the
/// corpus's id order). Reloading the result yields an equal corpus.
inline std::string to_manifest_csv(const Corpus& corpus) {
  std::string out(kManifestHeader);
  out += '\n';
  for (const ArticleRecord& rec : corpus.articles) {
    csv::Row row{rec.id,
                 rec.title,
                 rec.label == Label::reproducible ? "1" : "0",
                 std::string(to_string(rec.source)),
                 rec.text_path.string(),
                 rec.n_pages ? std::to_string(*rec.n_pages) : ""};
    out += csv::format_row(row);
  }
  return out;
}

inline void save_manifest(const Corpus& corpus,
                          const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write manifest: " + path.string());
  out << to_manifest_csv(corpus);
  if (!out) throw Error("write failure: " + path.string());
}

}  // namespace reprosig
