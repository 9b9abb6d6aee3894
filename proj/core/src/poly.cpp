#include "wproj/poly.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "wproj/error.hpp"

namespace wproj {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

class Parser {
 public:
  Parser(std::string_view text, const VariableTable& vars) : s_(text), vars_(vars) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      terms.push_back(term(negative));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return terms;
  }

 private:
  Term term(bool negative) {
    Term t{Integer(1), std::vector<std::uint32_t>(vars_.size(), 0)};
    skip_ws();
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = number();
      any = true;
    }
    while (true) {
      const std::size_t save = pos_;
      skip_ws();
      bool star = false;
      if (peek() == '*') {
        if (!any) fail("'*' without a left operand");
        star = true;
        ++pos_;
        skip_ws();
      }
      if (!is_ident_start(peek())) {
        if (star) fail("expected a variable after '*'");
        pos_ = save;
        break;
      }
      const std::size_t at = pos_;
      std::string name;
      while (is_ident_char(peek())) name += s_[pos_++];
      const std::size_t idx = vars_.find(name);
      if (idx == vars_.size()) fail_at(at, "unknown variable '" + name + "'");
      std::uint32_t e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent after '^'");
        const Integer v = number();
        if (!v.fits_uint_p()) fail("exponent too large");
        e = static_cast<std::uint32_t>(v.get_ui());
      }
      t.exps[idx] += e;
      any = true;
    }
    if (!any) fail("expected a term");
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  Integer number() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
    return Integer(digits);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError("polynomial syntax error at column " + std::to_string(at + 1) + ": " + msg);
  }

  std::string_view s_;
  const VariableTable& vars_;
  std::size_t pos_ = 0;
};

std::uint64_t weighted_degree(const std::vector<std::uint32_t>& exps, const WeightVector& w) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += static_cast<std::uint64_t>(exps[i]) * w[i];
  return d;
}

}  // namespace

VariableTable::VariableTable(std::vector<std::string> names, WeightVector weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw ParseError("variable and weight counts differ");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty() || !is_ident_start(names_[i][0]) ||
        !std::all_of(names_[i].begin(), names_[i].end(), is_ident_char))
      throw ParseError("invalid variable name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[j] == names_[i]) throw ParseError("duplicate variable '" + names_[i] + "'");
    }
  }
}

VariableTable VariableTable::parse(std::string_view header) {
  std::string text = trim(header);
  if (text.rfind("weights:", 0) == 0) text = text.substr(8);
  std::istringstream in(text);
  std::vector<std::string> names;
  std::vector<std::uint64_t> weights;
  std::string item;
  while (in >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("weights header: expected name=weight, got '" + item + "'");
    names.push_back(item.substr(0, eq));
    const Integer q = parse_integer(item.substr(eq + 1));
    if (q <= 0 || !q.fits_ulong_p()) throw ParseError("weights header: weight must be a positive integer in '" + item + "'");
    weights.push_back(q.get_ui());
  }
  if (names.size() < 2) throw ParseError("weights header needs at least two variables");
  return VariableTable(std::move(names), WeightVector(std::move(weights)));
}

VariableTable VariableTable::indexed(const WeightVector& w) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < w.size(); ++i) names.push_back("x" + std::to_string(i));
  return VariableTable(std::move(names), w);
}

std::size_t VariableTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return names_.size();
}

std::string VariableTable::to_string() const {
  std::string out = "weights:";
  for (std::size_t i = 0; i < names_.size(); ++i) out += " " + names_[i] + "=" + std::to_string(weights_[i]);
  return out;
}

bool grevlex_before(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da > db;
  // Larger in grevlex: smaller exponent in the last differing variable.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

WPoly::WPoly(VariableTable vars, std::vector<Term> terms) : vars_(std::move(vars)) {
  std::map<std::vector<std::uint32_t>, Integer> merged;
  for (auto& t : terms) {
    if (t.exps.size() != vars_.size()) throw ParseError("term has the wrong number of exponents");
    merged[t.exps] += t.coeff;
  }
  for (auto& [exps, c] : merged) {
    if (c != 0) terms_.push_back({c, exps});
  }
  if (terms_.empty()) throw ParseError("the zero polynomial has no weighted degree");
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return grevlex_before(a.exps, b.exps); });

  std::map<std::uint64_t, std::vector<std::size_t>> by_degree;
  for (std::size_t k = 0; k < terms_.size(); ++k) by_degree[weighted_degree(terms_[k].exps, weights())].push_back(k);
  if (by_degree.size() > 1) {
    std::string msg = "polynomial is not weighted homogeneous:";
    for (const auto& [d, idx] : by_degree) {
      msg += " degree " + std::to_string(d) + " {";
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) msg += ", ";
        msg += WPoly(vars_, {Term{1, terms_[idx[k]].exps}}).to_string();
      }
      msg += "}";
    }
    throw ParseError(msg);
  }
  degree_ = by_degree.begin()->first;
  if (degree_ == 0) throw ParseError("constant polynomial has weighted degree 0");
}

WPoly WPoly::parse(std::string_view text, const VariableTable& vars) {
  return WPoly(vars, Parser(text, vars).parse());
}

Integer WPoly::eval(std::span<const Integer> alpha) const {
  if (alpha.size() != vars_.size())
    throw DomainError("evaluation point has " + std::to_string(alpha.size()) + " coordinates, polynomial has " +
                      std::to_string(vars_.size()) + " variables");
  Integer total = 0, mono;
  for (const auto& t : terms_) {
    mono = t.coeff;
    for (std::size_t i = 0; i < alpha.size() && mono != 0; ++i) {
      if (t.exps[i]) mono *= pow(alpha[i], t.exps[i]);
    }
    total += mono;
  }
  return total;
}

std::string WPoly::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    const bool neg = t.coeff < 0;
    if (k == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Integer mag = abs(t.coeff);
    bool first = true;
    const bool constant = std::all_of(t.exps.begin(), t.exps.end(), [](std::uint32_t e) { return e == 0; });
    if (mag != 1 || constant) {
      out += mag.get_str();
      first = false;
    }
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (!t.exps[i]) continue;
      if (!first) out += " ";
      out += vars_.names()[i];
      if (t.exps[i] > 1) out += "^" + std::to_string(t.exps[i]);
      first = false;
    }
  }
  return out;
}

bool WPoly::operator==(const WPoly& other) const {
  if (!(vars_ == other.vars_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].coeff != other.terms_[k].coeff || terms_[k].exps != other.terms_[k].exps) return false;
  }
  return true;
}

std::vector<WPoly> parse_wpoly_file(std::string_view text) {
  std::vector<WPoly> out;
  std::vector<std::string> stanza;
  const auto flush = [&] {
    if (stanza.empty()) return;
    if (stanza.size() < 2) throw ParseError("wpoly stanza has a header but no polynomial");
    const VariableTable vars = VariableTable::parse(stanza[0]);
    std::string body;
    for (std::size_t k = 1; k < stanza.size(); ++k) body += stanza[k] + " ";
    out.push_back(WPoly::parse(body, vars));
    stanza.clear();
  };
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    const std::string content = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (content.empty()) {
      // Comment-only lines do not end a stanza; blank lines do.
      if (trim(line).empty()) flush();
      continue;
    }
    stanza.push_back(content);
  }
  flush();
  if (out.empty()) throw ParseError("wpoly file contains no polynomial");
  return out;
}

std::vector<WPoly> read_wpoly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_wpoly_file(buf.str());
}

}  // namespace wproj
