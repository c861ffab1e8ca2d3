// Minimal RFC 4180 CSV reading and writing: quoted fields, embedded
// commas/quotes/newlines, LF or CRLF row separators.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reprosig/common.hpp"

namespace reprosig::csv {

using Row = std::vector<std::string>;

/// Parses the whole document. Empty trailing line (from a final newline)
/// does not produce a row. Throws Error on an unterminated quoted field.
inline std::vector<Row> parse(std::string_view text) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  bool in_quotes = false;
  bool row_started = false;
  size_t line_no = 1;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
    row_started = false;
  };

  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line_no;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        row_started = true;
        break;
      case ',':
        end_field();
        row_started = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;  // CRLF
        field += c;
        break;
      case '\n':
        ++line_no;
        end_row();
        break;
      default:
        field += c;
        row_started = true;
        break;
    }
  }
  if (in_quotes)
    throw Error("csv: unterminated quoted field at line " +
                std::to_string(line_no));
  if (row_started || !row.empty()) end_row();
  return rows;
}

/// Quotes a field only when needed, doubling embedded quotes.
inline std::string escape(std::string_view field) {
  bool needs_quotes = false;
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs_quotes = true;
      break;
    }
  }
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string format_row(const Row& row) {
  std::string out;
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += escape(row[i]);
  }
  out += '\n';
  return out;
}

}  // namespace reprosig::csv
