#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wproj/formal_log.hpp"
#include "wproj/integer.hpp"

namespace wproj::cli {

// One output value. Exact numbers travel as text so no format loses digits.
struct Value {
  enum class Kind { kText, kExact, kCount, kReal, kBool, kLog, kInfinite, kNull };
  Kind kind = Kind::kText;
  std::string text;
  std::uint64_t count = 0;
  double real = 0;
  bool flag = false;
  FormalLog log;

  static Value str(std::string s);
  static Value exact(const Integer& v);
  static Value exact(const Rational& v);
  static Value number(std::uint64_t v);
  static Value real_number(double v);
  static Value boolean(bool b);
  static Value logarithm(const FormalLog& v);
  static Value infinite();
  static Value null();
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Value>> config;
  std::vector<std::pair<std::string, Value>> fields;
  std::vector<Table> tables;
  // Replaces the generic plain rendering when the natural plain form is a file format.
  std::optional<std::string> plain;

  void set(std::string key, Value v) { fields.emplace_back(std::move(key), std::move(v)); }
  void echo(std::string key, Value v) { config.emplace_back(std::move(key), std::move(v)); }
  // Logged on stderr but kept out of the report (e.g. worker counts, which
  // must not change the report bytes).
  std::vector<std::pair<std::string, Value>> log_only;
};

enum class Format { kJson, kCsv, kPlain };

constexpr int kSchemaVersion = 1;
extern const char* const kToolVersion;

void render(const Report& report, Format format, std::ostream& out);

}  // namespace wproj::cli
