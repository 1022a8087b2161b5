#include "goursat/io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace goursat::io {

using ordered_json = nlohmann::ordered_json;

Format parse_format(std::string_view text) {
  if (text == "plain") return Format::Plain;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown format: expected plain, csv or json");
}

// ---- plain ----

std::string trace_plain(const std::vector<TraceRow>& rows) {
  std::string out;
  for (const TraceRow& row : rows) {
    out += to_char(row.letter);
    out += ' ';
    out += row.vector.str();
    out += '\n';
  }
  return out;
}

std::string derive_plain(const ClassReport& report) {
  std::string out;
  out += "word: " + report.code.str() + '\n';
  out += "derived: " + report.derived.str() + '\n';
  out += "sgrv: " + report.sgrv.str() + '\n';
  out += "degree: " + report.degree.str() + '\n';
  return out;
}

namespace {

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string join_naturals(const std::vector<Natural>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += values[i].str();
  }
  return out;
}

}  // namespace

std::string report_plain(const ClassReport& report,
                         const std::optional<ValueTable>& table) {
  std::string out;
  out += "word: " + report.code.str() + '\n';
  out += "r: " + std::to_string(report.code.size()) + '\n';
  if (const auto* p = std::get_if<ParamProfile>(&report.params)) {
    out += "class: singular\n";
    out += "s: " + std::to_string(p->s) + '\n';
    out += "q: " + std::to_string(p->q()) + '\n';
    out += "k: " + join_ints(p->k) + '\n';
    out += "l: " + join_ints(p->l) + '\n';
    out += "n: " + join_ints(p->n) + '\n';
  } else {
    out += "class: generic\n";
  }
  out += "codim: " + std::to_string(report.codim) + '\n';
  out += "derived: " + report.derived.str() + '\n';
  out += "degree: " + report.degree.str() + '\n';
  out += "sgrv: " + report.sgrv.str() + '\n';
  out += "big_growth: " + join_ints(report.big_growth) + '\n';
  if (table) {
    out += "values: " + join_naturals(table->values) + '\n';
    out += "multiplicities: " + join_ints(table->multiplicities) + '\n';
    for (std::size_t i = 0; i < table->rows.size(); ++i) {
      out += "row " + std::to_string(i) + ": ";
      if (i > 0) {
        out += table->rows[i].scale.str() + " * (";
        out += join_naturals(table->rows[i].base) + ")";
      } else {
        out += join_naturals(table->rows[i].base);
      }
      out += '\n';
    }
  }
  return out;
}

std::string spectrum_plain(const SpectrumReport& s) {
  std::string out;
  out += "r: " + std::to_string(s.r) + '\n';
  out += "classes: " + std::to_string(s.classes) + '\n';
  out += "min: " + s.min_degree.str() + '\n';
  out += "max: " + s.max_degree.str() + '\n';
  out += "realized: " + join_naturals(s.realized) + '\n';
  out += "missing: " + join_naturals(s.missing) +
         (s.missing_truncated ? " ...\n" : "\n");
  out += "missing_total: " + s.missing_total.str() + '\n';
  return out;
}

std::string verify_plain(const EquivalenceSummary& s) {
  std::string out;
  for (std::size_t i = 0; i < s.classes_per_length.size(); ++i) {
    out += "r=" + std::to_string(2 + static_cast<int>(i)) + ": classes=" +
           std::to_string(s.classes_per_length[i]) + '\n';
  }
  out += "total: classes=" + std::to_string(s.total) +
         " divergences=" + std::to_string(s.divergences) + '\n';
  if (s.divergences == 0) {
    out += "OK\n";
  } else {
    out += "FIRST DIVERGENCE: " + s.first_divergence + '\n';
    out += "FAIL\n";
  }
  return out;
}

// ---- CSV ----

ClassRecord to_class_record(const ClassReport& report) {
  ClassRecord rec;
  rec.word = report.code.str();
  rec.r = report.code.size();
  if (const auto* p = std::get_if<ParamProfile>(&report.params)) {
    rec.s = p->s;
    rec.q = p->q();
  }
  rec.codim = report.codim;
  rec.derived = report.derived.str();
  rec.degree = report.degree.str();
  return rec;
}

std::string class_record_csv_header() {
  return "word,r,s,q,codim,derived,degree";
}

std::string class_record_csv_row(const ClassRecord& rec) {
  std::string out = rec.word;
  out += ',' + std::to_string(rec.r);
  out += ',';
  if (rec.s) out += std::to_string(*rec.s);
  out += ',';
  if (rec.q) out += std::to_string(*rec.q);
  out += ',' + std::to_string(rec.codim);
  out += ',' + rec.derived;
  out += ',' + rec.degree;
  return out;
}

ClassRecord parse_class_record_csv(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  if (fields.size() != 7) {
    throw std::invalid_argument("class record needs 7 CSV fields, got " +
                                std::to_string(fields.size()));
  }
  ClassRecord rec;
  rec.word = fields[0];
  rec.r = std::stoi(fields[1]);
  if (!fields[2].empty()) rec.s = std::stoi(fields[2]);
  if (!fields[3].empty()) rec.q = std::stoi(fields[3]);
  if (rec.s.has_value() != rec.q.has_value()) {
    throw std::invalid_argument("class record: s and q must both be set or both empty");
  }
  rec.codim = std::stoi(fields[4]);
  rec.derived = fields[5];
  rec.degree = fields[6];
  return rec;
}

// ---- JSON ----

namespace {

ordered_json ints_as_strings(const std::vector<int>& values) {
  ordered_json arr = ordered_json::array();
  for (int v : values) arr.push_back(std::to_string(v));
  return arr;
}

ordered_json naturals_as_strings(const std::vector<Natural>& values) {
  ordered_json arr = ordered_json::array();
  for (const Natural& v : values) arr.push_back(v.str());
  return arr;
}

ordered_json params_json(const ClassParams& params) {
  ordered_json obj;
  if (const auto* p = std::get_if<ParamProfile>(&params)) {
    obj["generic"] = false;
    obj["s"] = std::to_string(p->s);
    obj["q"] = std::to_string(p->q());
    obj["k"] = ints_as_strings(p->k);
    obj["l"] = ints_as_strings(p->l);
    obj["n"] = ints_as_strings(p->n);
  } else {
    obj["generic"] = true;
  }
  return obj;
}

ClassParams params_from_json(const ordered_json& obj, int r) {
  if (obj.at("generic").get<bool>()) {
    return GenericMarker{r};
  }
  auto ints = [](const ordered_json& arr) {
    std::vector<int> out;
    for (const auto& v : arr) out.push_back(std::stoi(v.get<std::string>()));
    return out;
  };
  return make_param_profile(std::stoi(obj.at("s").get<std::string>()),
                            ints(obj.at("k")), ints(obj.at("l")));
}

ordered_json sgrv_json(const SmallGrowthVector& sgrv) {
  ordered_json obj;
  obj["length"] = sgrv.length().str();
  ordered_json runs = ordered_json::array();
  for (const auto& run : sgrv.runs()) {
    runs.push_back(ordered_json::array(
        {std::to_string(run.dim), run.count.str()}));
  }
  obj["runs"] = runs;
  if (auto len = sgrv.length().to_uint64(); len && *len <= 10'000) {
    ordered_json dims = ordered_json::array();
    for (int dim : sgrv.expand()) dims.push_back(std::to_string(dim));
    obj["dims"] = dims;
  }
  return obj;
}

SmallGrowthVector sgrv_from_json(const ordered_json& obj) {
  std::vector<SmallGrowthVector::Run> runs;
  for (const auto& run : obj.at("runs")) {
    runs.push_back({std::stoi(run.at(0).get<std::string>()),
                    Natural::from_decimal(run.at(1).get<std::string>())});
  }
  return SmallGrowthVector(std::move(runs));
}

DerivedVector derived_from_json(const ordered_json& arr) {
  std::vector<Natural> entries;
  for (const auto& v : arr) {
    entries.push_back(Natural::from_decimal(v.get<std::string>()));
  }
  return DerivedVector(std::move(entries));
}

ordered_json table_json(const ValueTable& table) {
  ordered_json obj;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r;
    r["scale"] = row.scale.str();
    r["base"] = naturals_as_strings(row.base);
    rows.push_back(r);
  }
  obj["rows"] = rows;
  obj["values"] = naturals_as_strings(table.values);
  obj["multiplicities"] = ints_as_strings(table.multiplicities);
  return obj;
}

ValueTable table_from_json(const ordered_json& obj) {
  ValueTable table;
  for (const auto& row : obj.at("rows")) {
    ValueTable::Row r;
    r.scale = Natural::from_decimal(row.at("scale").get<std::string>());
    for (const auto& v : row.at("base")) {
      r.base.push_back(Natural::from_decimal(v.get<std::string>()));
    }
    table.rows.push_back(std::move(r));
  }
  for (const auto& v : obj.at("values")) {
    table.values.push_back(Natural::from_decimal(v.get<std::string>()));
  }
  for (const auto& v : obj.at("multiplicities")) {
    table.multiplicities.push_back(std::stoi(v.get<std::string>()));
  }
  return table;
}

std::string dump(const ordered_json& obj) { return obj.dump(2) + "\n"; }

}  // namespace

std::string class_report_json(const ClassReport& report,
                              const std::optional<ValueTable>& table) {
  ordered_json obj;
  obj["schema_version"] = std::string(kSchemaVersion);
  obj["kind"] = "class_report";
  obj["word"] = report.code.str();
  obj["r"] = std::to_string(report.code.size());
  obj["params"] = params_json(report.params);
  obj["codim"] = std::to_string(report.codim);
  ordered_json derived = ordered_json::array();
  for (const Natural& e : report.derived.entries()) derived.push_back(e.str());
  obj["derived"] = derived;
  obj["degree"] = report.degree.str();
  obj["sgrv"] = sgrv_json(report.sgrv);
  obj["big_growth"] = ints_as_strings(report.big_growth);
  if (table) {
    obj["value_table"] = table_json(*table);
  }
  return dump(obj);
}

std::pair<ClassReport, std::optional<ValueTable>> parse_class_report_json(
    std::string_view text) {
  ordered_json obj = ordered_json::parse(text);
  if (obj.at("schema_version").get<std::string>() != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema_version");
  }
  ClassCode code = ClassCode::parse(obj.at("word").get<std::string>());
  std::vector<int> big_growth;
  for (const auto& v : obj.at("big_growth")) {
    big_growth.push_back(std::stoi(v.get<std::string>()));
  }
  ClassReport report{
      code,
      params_from_json(obj.at("params"), code.size()),
      derived_from_json(obj.at("derived")),
      sgrv_from_json(obj.at("sgrv")),
      Natural::from_decimal(obj.at("degree").get<std::string>()),
      std::stoi(obj.at("codim").get<std::string>()),
      std::move(big_growth),
  };
  std::optional<ValueTable> table;
  if (obj.contains("value_table")) {
    table = table_from_json(obj.at("value_table"));
  }
  return {std::move(report), std::move(table)};
}

std::string spectrum_json(const SpectrumReport& s) {
  ordered_json obj;
  obj["schema_version"] = std::string(kSchemaVersion);
  obj["kind"] = "spectrum";
  obj["r"] = std::to_string(s.r);
  obj["classes"] = std::to_string(s.classes);
  obj["min"] = s.min_degree.str();
  obj["max"] = s.max_degree.str();
  obj["realized"] = naturals_as_strings(s.realized);
  obj["missing"] = naturals_as_strings(s.missing);
  obj["missing_total"] = s.missing_total.str();
  obj["missing_truncated"] = s.missing_truncated;
  return dump(obj);
}

std::string verify_json(const EquivalenceSummary& s) {
  ordered_json obj;
  obj["schema_version"] = std::string(kSchemaVersion);
  obj["kind"] = "verify";
  obj["r_max"] = std::to_string(s.r_max);
  ordered_json lengths = ordered_json::array();
  for (std::size_t i = 0; i < s.classes_per_length.size(); ++i) {
    ordered_json entry;
    entry["r"] = std::to_string(2 + static_cast<int>(i));
    entry["classes"] = std::to_string(s.classes_per_length[i]);
    lengths.push_back(entry);
  }
  obj["per_length"] = lengths;
  obj["total"] = std::to_string(s.total);
  obj["divergences"] = std::to_string(s.divergences);
  if (s.first_divergence.empty()) {
    obj["first_divergence"] = nullptr;
  } else {
    obj["first_divergence"] = s.first_divergence;
  }
  obj["ok"] = s.divergences == 0;
  return dump(obj);
}

std::string enumeration_json(int r, const Natural& count,
                             const std::vector<std::string>& words,
                             const std::vector<ClassRecord>& records) {
  ordered_json obj;
  obj["schema_version"] = std::string(kSchemaVersion);
  obj["kind"] = "enumeration";
  obj["r"] = std::to_string(r);
  obj["count"] = count.str();
  if (!words.empty()) {
    obj["words"] = words;
  }
  if (!records.empty()) {
    ordered_json classes = ordered_json::array();
    for (const ClassRecord& rec : records) {
      ordered_json entry;
      entry["word"] = rec.word;
      entry["r"] = std::to_string(rec.r);
      if (rec.s) {
        entry["s"] = std::to_string(*rec.s);
        entry["q"] = std::to_string(*rec.q);
      }
      entry["codim"] = std::to_string(rec.codim);
      entry["derived"] = rec.derived;
      entry["degree"] = rec.degree;
      classes.push_back(entry);
    }
    obj["classes"] = classes;
  }
  return dump(obj);
}

std::string trace_json(const ClassCode& code,
                       const std::vector<TraceRow>& rows) {
  ordered_json obj;
  obj["schema_version"] = std::string(kSchemaVersion);
  obj["kind"] = "trace";
  obj["word"] = code.str();
  ordered_json steps = ordered_json::array();
  for (const TraceRow& row : rows) {
    ordered_json entry;
    entry["letter"] = std::string(1, to_char(row.letter));
    ordered_json vec = ordered_json::array();
    for (const Natural& e : row.vector.entries()) vec.push_back(e.str());
    entry["vector"] = vec;
    steps.push_back(entry);
  }
  obj["rows"] = steps;
  return dump(obj);
}

}  // namespace goursat::io
