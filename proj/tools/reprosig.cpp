// Command-line front end: extract features, run the significance
// battery, generate synthetic corpora. Diagnostics go to stderr; data
// goes to files only. Exit codes: 0 success, 1 user/input error,
// 2 internal error.
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "reprosig/analyze.hpp"
#include "reprosig/corpus.hpp"
#include "reprosig/synth.hpp"

namespace {

namespace fs = std::filesystem;

int resolve_parallelism(const std::string& value) {
  if (value == "auto") {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(value, &used);
    if (used != value.size()) n = 0;
  } catch (const std::exception&) {
    n = 0;
  }
  if (n < 1)
    throw reprosig::Error("--parallelism must be a positive integer or 'auto'");
  return n;
}

reprosig::ReportFormats resolve_formats(const std::string& list) {
  reprosig::ReportFormats f{false, false, false};
  size_t start = 0;
  bool any = false;
  while (start <= list.size()) {
    size_t comma = list.find(',', start);
    std::string tok = comma == std::string::npos
                          ? list.substr(start)
                          : list.substr(start, comma - start);
    if (tok == "markdown") {
      f.markdown = true;
    } else if (tok == "csv") {
      f.csv = true;
    } else if (tok == "json") {
      f.json = true;
    } else if (!tok.empty()) {
      throw reprosig::Error("unknown format '" + tok +
                            "' (want markdown, csv, json)");
    }
    any = any || !tok.empty();
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (!any) throw reprosig::Error("--format needs at least one of markdown, csv, json");
  return f;
}

void report_diagnostics(const reprosig::FeatureMatrix& matrix) {
  for (size_t i = 0; i < matrix.n_articles(); ++i)
    if (!matrix.diagnostics[i].empty())
      std::cerr << matrix.article_ids[i] << ": " << matrix.diagnostics[i]
                << "\n";
}

reprosig::FeatureMatrix extract_to_dir(const std::string& manifest,
                                       const fs::path& out_dir,
                                       int parallelism) {
  reprosig::Corpus corpus = reprosig::load_manifest(manifest);
  reprosig::FeatureMatrix matrix = reprosig::build_feature_matrix(
      corpus, reprosig::default_lexicons(), parallelism);
  fs::create_directories(out_dir);
  reprosig::write_features_csv(matrix, out_dir / "features.csv");
  report_diagnostics(matrix);
  std::cerr << "wrote " << (out_dir / "features.csv").string() << " ("
            << matrix.n_articles() << " articles)\n";
  return matrix;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "reprosig: structural/linguistic feature extraction and significance "
      "testing for labeled article corpora"};
  app.require_subcommand(1);

  std::string manifest;
  std::string out_dir;
  std::string format_list = "markdown,csv,json";
  std::string parallelism = "1";
  double alpha = 0.05;
  bool no_yates = false;
  std::uint64_t seed = 0;
  int n_docs = 300;
  int words_per_doc = 500;
  std::string mode = "planted";

  CLI::App* extract =
      app.add_subcommand("extract", "extract features.csv from a manifest");
  extract->add_option("--manifest", manifest, "corpus manifest CSV")
      ->required();
  extract->add_option("--out", out_dir, "output directory")->required();
  extract->add_option("--parallelism", parallelism,
                      "worker threads (positive integer or 'auto')");

  CLI::App* analyze = app.add_subcommand(
      "analyze", "run the significance battery and render report tables");
  analyze->add_option("--manifest", manifest,
                      "corpus manifest CSV (extracts features first; "
                      "otherwise <out>/features.csv must exist)");
  analyze->add_option("--out", out_dir, "output directory")->required();
  analyze->add_option("--alpha", alpha, "significance level, default 0.05");
  analyze->add_flag("--no-yates", no_yates,
                    "disable Yates continuity correction on 2x2 tables");
  analyze->add_option("--format", format_list,
                      "comma-separated subset of markdown,csv,json");
  analyze->add_option("--parallelism", parallelism,
                      "worker threads (positive integer or 'auto')");

  CLI::App* synth = app.add_subcommand(
      "synth", "generate a seeded synthetic labeled corpus with manifest");
  synth->add_option("--out", out_dir, "output directory")->required();
  synth->add_option("--seed", seed, "generator seed")->required();
  synth->add_option("--n-docs", n_docs, "number of documents, default 300");
  synth->add_option("--mode", mode,
                    "'planted' (label-dependent hyperlink rate) or 'null'");
  synth->add_option("--words-per-doc", words_per_doc,
                    "approximate prose words per document, default 500");

  try {
    app.parse(argc, argv);

    if (extract->parsed()) {
      extract_to_dir(manifest, out_dir, resolve_parallelism(parallelism));
      return 0;
    }

    if (analyze->parsed()) {
      const reprosig::ReportFormats formats = resolve_formats(format_list);
      const int threads = resolve_parallelism(parallelism);
      reprosig::FeatureMatrix matrix;
      if (!manifest.empty()) {
        matrix = extract_to_dir(manifest, out_dir, threads);
      } else {
        const fs::path features = fs::path(out_dir) / "features.csv";
        if (!fs::exists(features))
          throw reprosig::Error("no manifest given and " + features.string() +
                                " does not exist");
        matrix = reprosig::read_features_csv(features);
      }
      reprosig::SignificanceReport report =
          reprosig::run_significance_suite(matrix, alpha, !no_yates);
      reprosig::render_report(report, formats, out_dir);
      std::cerr << "wrote report tables to " << out_dir << " (alpha=" << alpha
                << ", " << report.significant_set.size()
                << " significant features)\n";
      return 0;
    }

    if (synth->parsed()) {
      reprosig::SynthConfig config;
      config.seed = seed;
      config.n_docs = n_docs;
      config.words_per_doc = words_per_doc;
      if (mode == "planted") {
        config.planted = true;
      } else if (mode == "null") {
        config.planted = false;
      } else {
        throw reprosig::Error("--mode must be 'planted' or 'null'");
      }
      reprosig::SyntheticCorpus corpus = reprosig::generate_synthetic_corpus(config);
      reprosig::write_synthetic_corpus(corpus, out_dir);
      std::cerr << "wrote " << corpus.docs.size() << " documents under "
                << out_dir << "\n";
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const reprosig::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
