#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goursat/analysis.hpp"
#include "goursat/closed_form.hpp"
#include "goursat/recurrence.hpp"
#include "goursat/word.hpp"

namespace goursat::io {

inline constexpr std::string_view kSchemaVersion = "1";

enum class Format { Plain, Csv, Json };

/// Accepts "plain", "csv", "json". Throws std::invalid_argument.
Format parse_format(std::string_view text);

// All output is deterministic: identical inputs produce identical bytes.
// Structured output serializes every integer as a decimal string so values
// never pass through floating point.

// ---- plain ----

/// One row per step: the letter, a space, then the entries space-separated.
std::string trace_plain(const std::vector<TraceRow>& rows);

std::string derive_plain(const ClassReport& report);
std::string report_plain(const ClassReport& report,
                         const std::optional<ValueTable>& table);
std::string spectrum_plain(const SpectrumReport& s);
std::string verify_plain(const EquivalenceSummary& s);

// ---- CSV class records ----

/// Columns: word,r,s,q,codim,derived,degree. The derived field is
/// space-separated; s and q are empty for the generic class.
struct ClassRecord {
  std::string word;
  int r = 0;
  std::optional<int> s;
  std::optional<int> q;
  int codim = 0;
  std::string derived;  // "1 1 2 2 4 4 10"
  std::string degree;   // decimal string
  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

ClassRecord to_class_record(const ClassReport& report);
std::string class_record_csv_header();
std::string class_record_csv_row(const ClassRecord& rec);
/// Inverse of class_record_csv_row. Throws std::invalid_argument on a
/// malformed line.
ClassRecord parse_class_record_csv(std::string_view line);

// ---- JSON records (schema_version "1") ----

std::string class_report_json(const ClassReport& report,
                              const std::optional<ValueTable>& table);
/// Parses a class_report record back; re-emitting the result reproduces the
/// input bytes.
std::pair<ClassReport, std::optional<ValueTable>> parse_class_report_json(
    std::string_view text);

std::string spectrum_json(const SpectrumReport& s);
std::string verify_json(const EquivalenceSummary& s);
std::string enumeration_json(int r, const Natural& count,
                             const std::vector<std::string>& words,
                             const std::vector<ClassRecord>& records);

// ---- trace as JSON ----
std::string trace_json(const ClassCode& code, const std::vector<TraceRow>& rows);

}  // namespace goursat::io
