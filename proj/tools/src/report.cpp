#include "wproj_cli/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace wproj::cli {

#ifndef WPROJ_VERSION
#define WPROJ_VERSION "0.0.0"
#endif
const char* const kToolVersion = WPROJ_VERSION;

Value Value::str(std::string s) {
  Value v;
  v.text = std::move(s);
  return v;
}
Value Value::exact(const Integer& n) {
  Value v;
  v.kind = Kind::kExact;
  v.text = n.get_str();
  return v;
}
Value Value::exact(const Rational& r) {
  Value v;
  v.kind = Kind::kExact;
  v.text = to_string(r);
  return v;
}
Value Value::number(std::uint64_t n) {
  Value v;
  v.kind = Kind::kCount;
  v.count = n;
  v.text = std::to_string(n);
  return v;
}
Value Value::real_number(double d) {
  Value v;
  v.kind = Kind::kReal;
  v.real = d;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", d);
  v.text = buf;
  return v;
}
Value Value::boolean(bool b) {
  Value v;
  v.kind = Kind::kBool;
  v.flag = b;
  v.text = b ? "true" : "false";
  return v;
}
Value Value::logarithm(const FormalLog& l) {
  Value v;
  v.kind = Kind::kLog;
  v.log = l;
  v.text = l.to_string();
  return v;
}
Value Value::infinite() {
  Value v;
  v.kind = Kind::kInfinite;
  v.text = "inf";
  return v;
}

Value Value::null() {
  Value v;
  v.kind = Kind::kNull;
  v.text = "-";
  return v;
}

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const Value& v) {
  switch (v.kind) {
    case Value::Kind::kCount:
      return v.count;
    case Value::Kind::kReal:
      return v.real;
    case Value::Kind::kBool:
      return v.flag;
    case Value::Kind::kNull:
      return nullptr;
    case Value::Kind::kLog: {
      ordered_json coeffs = ordered_json::object();
      for (const auto& [p, c] : v.log.coefficients()) coeffs[p.get_str()] = to_string(c);
      ordered_json out = {{"exact", v.text}, {"coefficients", coeffs}};
      if (v.log.constant_term() != 0) out["log_e"] = to_string(v.log.constant_term());
      out["decimal"] = v.log.decimal();
      return out;
    }
    default:
      return v.text;
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_field(std::ostream& out, const std::string& key, const Value& v) {
  out << csv_cell(key) << ',' << csv_cell(v.text) << '\n';
  if (v.kind == Value::Kind::kLog) out << csv_cell(key + ".decimal") << ',' << v.log.decimal() << '\n';
}

}  // namespace

void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::kJson: {
      ordered_json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["tool"] = "wproj";
      doc["version"] = kToolVersion;
      doc["command"] = report.command;
      ordered_json config = ordered_json::object();
      for (const auto& [k, v] : report.config) config[k] = to_json(v);
      doc["config"] = config;
      ordered_json result = ordered_json::object();
      for (const auto& [k, v] : report.fields) result[k] = to_json(v);
      for (const auto& t : report.tables) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : t.rows) {
          ordered_json r = ordered_json::object();
          for (std::size_t c = 0; c < t.columns.size(); ++c) r[t.columns[c]] = to_json(row[c]);
          rows.push_back(std::move(r));
        }
        result[t.name] = std::move(rows);
      }
      doc["result"] = result;
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv: {
      out << "key,value\n";
      out << "schema_version," << kSchemaVersion << '\n';
      out << "tool,wproj\n";
      out << "version," << kToolVersion << '\n';
      out << "command," << csv_cell(report.command) << '\n';
      for (const auto& [k, v] : report.config) csv_field(out, "config." + k, v);
      for (const auto& [k, v] : report.fields) csv_field(out, k, v);
      for (const auto& t : report.tables) {
        out << "\n# " << t.name << '\n';
        for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << csv_cell(t.columns[c]);
        out << '\n';
        for (const auto& row : t.rows) {
          for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c].text);
          out << '\n';
        }
      }
      break;
    }
    case Format::kPlain: {
      if (report.plain) {
        out << *report.plain;
        break;
      }
      for (const auto& [k, v] : report.fields) {
        out << v.text << '\n';
        if (v.kind == Value::Kind::kLog) out << v.log.decimal() << '\n';
      }
      for (const auto& t : report.tables) {
        for (const auto& row : t.rows) {
          for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c].text;
          out << '\n';
        }
      }
      break;
    }
  }
}

}  // namespace wproj::cli
