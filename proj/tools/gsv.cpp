// gsv -- exact small growth vectors of Goursat distributions.
//
// Subcommands: derive, trace, enumerate, verify, spectrum, report.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
// Output on stdout is byte-deterministic for identical arguments; timing
// goes to stderr.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "goursat/analysis.hpp"
#include "goursat/closed_form.hpp"
#include "goursat/io.hpp"
#include "goursat/recurrence.hpp"
#include "goursat/word.hpp"

namespace {

using namespace goursat;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

int default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

enum class Method { Both, Recurrence, Closed };

Method parse_method(const std::string& text) {
  if (text == "both") return Method::Both;
  if (text == "recurrence") return Method::Recurrence;
  if (text == "closed") return Method::Closed;
  throw std::invalid_argument(
      "unknown method: expected both, recurrence or closed");
}

// Like class_report, but honoring the requested derivation path. "both"
// computes the two derivations and insists they agree.
ClassReport build_report(const ClassCode& code, Method method) {
  if (method == Method::Both) {
    return class_report(code);
  }
  DerivedVector derived = method == Method::Recurrence
                              ? derive_recurrence(code)
                              : derived_closed(code);
  return ClassReport{
      code,
      extract_params(code),
      derived,
      small_growth_vector(derived),
      nonholonomy_degree(derived),
      codimension(code),
      big_growth_vector(code.size()),
  };
}

int cmd_derive(const std::string& word, const std::string& method_text,
               const std::string& format_text) {
  io::Format format = io::parse_format(format_text);
  Method method = parse_method(method_text);
  ClassReport report = build_report(ClassCode::parse(word), method);
  switch (format) {
    case io::Format::Plain:
      std::cout << io::derive_plain(report);
      break;
    case io::Format::Csv:
      std::cout << io::class_record_csv_header() << '\n'
                << io::class_record_csv_row(io::to_class_record(report))
                << '\n';
      break;
    case io::Format::Json:
      std::cout << io::class_report_json(report, std::nullopt);
      break;
  }
  return kExitOk;
}

int cmd_trace(const std::string& word, const std::string& format_text) {
  io::Format format = io::parse_format(format_text);
  if (format == io::Format::Csv) {
    throw std::invalid_argument("trace supports plain and json formats");
  }
  ClassCode code = ClassCode::parse(word);
  auto rows = trace_recurrence(code);
  if (format == io::Format::Plain) {
    std::cout << io::trace_plain(rows);
  } else {
    std::cout << io::trace_json(code, rows);
  }
  return kExitOk;
}

int cmd_enumerate(int r, bool count_only, bool with_report, bool rvt,
                  const std::string& format_text) {
  io::Format format = io::parse_format(format_text);
  if (count_only) {
    std::cout << count_admissible(r).str() << '\n';
    return kExitOk;
  }
  Natural count = count_admissible(r);
  switch (format) {
    case io::Format::Plain: {
      if (with_report) {
        for (Enumerator e(r); !e.done(); e.advance()) {
          ClassReport rep = class_report(e.code());
          std::cout << "word: "
                    << (rvt ? rep.code.str_rvt() : rep.code.str()) << '\n'
                    << "derived: " << rep.derived.str() << '\n'
                    << "degree: " << rep.degree.str() << "\n\n";
        }
      } else {
        for (Enumerator e(r); !e.done(); e.advance()) {
          ClassCode code = e.code();
          std::cout << (rvt ? code.str_rvt() : code.str()) << '\n';
        }
      }
      std::cout << "count: " << count.str() << '\n';
      break;
    }
    case io::Format::Csv: {
      if (with_report) {
        std::cout << io::class_record_csv_header() << '\n';
        for (Enumerator e(r); !e.done(); e.advance()) {
          std::cout << io::class_record_csv_row(
                           io::to_class_record(class_report(e.code())))
                    << '\n';
        }
      } else {
        std::cout << "word\n";
        for (Enumerator e(r); !e.done(); e.advance()) {
          ClassCode code = e.code();
          std::cout << (rvt ? code.str_rvt() : code.str()) << '\n';
        }
      }
      break;
    }
    case io::Format::Json: {
      std::vector<std::string> words;
      std::vector<io::ClassRecord> records;
      for (Enumerator e(r); !e.done(); e.advance()) {
        ClassCode code = e.code();
        if (with_report) {
          records.push_back(io::to_class_record(class_report(code)));
        } else {
          words.push_back(rvt ? code.str_rvt() : code.str());
        }
      }
      std::cout << io::enumeration_json(r, count, words, records);
      break;
    }
  }
  return kExitOk;
}

int cmd_verify(int r_max, int jobs, const std::string& format_text) {
  io::Format format = io::parse_format(format_text);
  if (format == io::Format::Csv) {
    throw std::invalid_argument("verify supports plain and json formats");
  }
  auto start = std::chrono::steady_clock::now();
  EquivalenceSummary summary = verify_equivalence(r_max, jobs);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cerr << "elapsed: " << elapsed.count() << " ms (jobs=" << jobs << ")\n";
  if (format == io::Format::Plain) {
    std::cout << io::verify_plain(summary);
  } else {
    std::cout << io::verify_json(summary);
  }
  return summary.divergences == 0 ? kExitOk : kExitVerifyFail;
}

int cmd_spectrum(int r, int jobs, std::size_t max_missing,
                 const std::string& format_text) {
  io::Format format = io::parse_format(format_text);
  if (format == io::Format::Csv) {
    throw std::invalid_argument("spectrum supports plain and json formats");
  }
  SpectrumReport report = degree_spectrum(r, jobs, max_missing);
  if (format == io::Format::Plain) {
    std::cout << io::spectrum_plain(report);
  } else {
    std::cout << io::spectrum_json(report);
  }
  return kExitOk;
}

int cmd_report(const std::string& word, const std::string& format_text) {
  io::Format format = io::parse_format(format_text);
  ClassReport report = class_report(ClassCode::parse(word));
  std::optional<ValueTable> table;
  if (const auto* p = std::get_if<ParamProfile>(&report.params)) {
    table = value_table(*p);
  }
  switch (format) {
    case io::Format::Plain:
      std::cout << io::report_plain(report, table);
      break;
    case io::Format::Csv:
      std::cout << io::class_record_csv_header() << '\n'
                << io::class_record_csv_row(io::to_class_record(report))
                << '\n';
      break;
    case io::Format::Json:
      std::cout << io::class_report_json(report, table);
      break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact small growth vectors of Goursat distributions"};
  app.require_subcommand(1);

  std::string word;
  std::string method = "both";
  std::string format = "plain";
  int r = 2;
  int jobs = default_jobs();
  std::size_t max_missing = 1000;
  bool count_only = false;
  bool with_report = false;
  bool rvt = false;

  auto* derive = app.add_subcommand(
      "derive", "derived vector, small growth vector and degree of a word");
  derive->add_option("word", word, "class code over {G,S,T}")->required();
  derive->add_option("--method", method, "both | recurrence | closed");
  derive->add_option("--format", format, "plain | csv | json");

  auto* trace = app.add_subcommand(
      "trace", "letter-annotated table of all recurrence steps");
  trace->add_option("word", word, "class code over {G,S,T}")->required();
  trace->add_option("--format", format, "plain | json");

  auto* enumerate = app.add_subcommand(
      "enumerate", "stream all admissible words of a length, in order");
  enumerate->add_option("r", r, "word length (>= 2)")->required();
  enumerate->add_flag("--count-only", count_only, "print only the count");
  enumerate->add_flag("--report", with_report, "full class record per word");
  enumerate->add_flag("--rvt", rvt, "display words in the R/V/T alphabet");
  enumerate->add_option("--format", format, "plain | csv | json");

  auto* verify = app.add_subcommand(
      "verify", "cross-check closed form against the recurrence, all lengths");
  verify->add_option("r_max", r, "largest word length (>= 2)")->required();
  verify->add_option("--jobs", jobs, "worker threads for the sweep");
  verify->add_option("--format", format, "plain | json");

  auto* spectrum = app.add_subcommand(
      "spectrum", "realized and missing nonholonomy degrees in one length");
  spectrum->add_option("r", r, "word length (>= 2)")->required();
  spectrum->add_option("--jobs", jobs, "worker threads for the sweep");
  spectrum->add_option("--max-missing", max_missing,
                       "cap on explicitly listed missing values");
  spectrum->add_option("--format", format, "plain | json");

  auto* report = app.add_subcommand(
      "report", "full per-class record, including the value table");
  report->add_option("word", word, "class code over {G,S,T}")->required();
  report->add_option("--format", format, "plain | csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (derive->parsed()) return cmd_derive(word, method, format);
    if (trace->parsed()) return cmd_trace(word, format);
    if (enumerate->parsed())
      return cmd_enumerate(r, count_only, with_report, rvt, format);
    if (verify->parsed()) return cmd_verify(r, jobs, format);
    if (spectrum->parsed()) return cmd_spectrum(r, jobs, max_missing, format);
    if (report->parsed()) return cmd_report(word, format);
  } catch (const ParseError& e) {
    std::cerr << "parse error (" << to_string(e.kind()) << "): " << e.what()
              << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OracleDivergence& e) {
    std::cerr << "divergence: " << e.what() << '\n';
    return kExitVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFail;
  }
  return kExitOk;
}
