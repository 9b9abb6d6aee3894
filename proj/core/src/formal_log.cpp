#include "wproj/formal_log.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "wproj/error.hpp"
#include "wproj/factor.hpp"

namespace wproj {

namespace {

class Mpfr {
 public:
  explicit Mpfr(long bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Interval [lo, hi] for the represented value at the given precision.
void evaluate(const FormalLog& value, long bits, Mpfr& lo, Mpfr& hi) {
  Mpfr t_lo(bits), t_hi(bits), log_lo(bits), log_hi(bits);
  mpfr_set_q(lo.get(), value.constant_term().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), value.constant_term().get_mpq_t(), MPFR_RNDU);
  for (const auto& [p, c] : value.coefficients()) {
    mpfr_set_z(log_lo.get(), p.get_mpz_t(), MPFR_RNDD);
    mpfr_log(log_lo.get(), log_lo.get(), MPFR_RNDD);
    mpfr_set_z(log_hi.get(), p.get_mpz_t(), MPFR_RNDU);
    mpfr_log(log_hi.get(), log_hi.get(), MPFR_RNDU);
    // log p > 0, so c * [log_lo, log_hi] is ordered by the sign of c.
    const Integer abs_num = abs(Integer(c.get_num()));
    if (c > 0) {
      mpfr_mul_z(t_lo.get(), log_lo.get(), abs_num.get_mpz_t(), MPFR_RNDD);
      mpfr_div_z(t_lo.get(), t_lo.get(), c.get_den_mpz_t(), MPFR_RNDD);
      mpfr_mul_z(t_hi.get(), log_hi.get(), abs_num.get_mpz_t(), MPFR_RNDU);
      mpfr_div_z(t_hi.get(), t_hi.get(), c.get_den_mpz_t(), MPFR_RNDU);
    } else {
      mpfr_mul_z(t_lo.get(), log_hi.get(), abs_num.get_mpz_t(), MPFR_RNDU);
      mpfr_div_z(t_lo.get(), t_lo.get(), c.get_den_mpz_t(), MPFR_RNDU);
      mpfr_neg(t_lo.get(), t_lo.get(), MPFR_RNDD);
      mpfr_mul_z(t_hi.get(), log_lo.get(), abs_num.get_mpz_t(), MPFR_RNDD);
      mpfr_div_z(t_hi.get(), t_hi.get(), c.get_den_mpz_t(), MPFR_RNDD);
      mpfr_neg(t_hi.get(), t_hi.get(), MPFR_RNDU);
    }
    mpfr_add(lo.get(), lo.get(), t_lo.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), t_hi.get(), MPFR_RNDU);
  }
}

std::string rational_coefficient_text(const Rational& c) {
  // c > 0 here.
  if (c == 1) return "";
  if (c.get_den() == 1) return c.get_num().get_str() + "·";
  return "(" + c.get_str() + ")·";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

FormalLog FormalLog::log_prime(const Integer& p, const Rational& c) {
  if (!is_prime(p)) throw DomainError("log_prime: " + p.get_str() + " is not prime");
  FormalLog out;
  out.add_term(p, c);
  return out;
}

FormalLog FormalLog::log_abs(const Rational& r) {
  if (r == 0) throw DomainError("log of zero");
  FormalLog out;
  if (r.get_num() != 1 && r.get_num() != -1) {
    for (const auto& [p, e] : factor(Integer(r.get_num())).factors) out.add_term(p, Rational(e));
  }
  if (r.get_den() != 1) {
    for (const auto& [p, e] : factor(Integer(r.get_den())).factors) out.add_term(p, -Rational(e));
  }
  return out;
}

FormalLog FormalLog::constant(const Rational& c) {
  FormalLog out;
  out.constant_ = c;
  out.constant_.canonicalize();
  return out;
}

Rational FormalLog::coefficient(const Integer& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void FormalLog::add_term(const Integer& p, const Rational& raw) {
  Rational c = raw;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

FormalLog& FormalLog::operator+=(const FormalLog& other) {
  for (const auto& [p, c] : other.coeffs_) add_term(p, c);
  constant_ += other.constant_;
  return *this;
}

FormalLog& FormalLog::operator-=(const FormalLog& other) {
  for (const auto& [p, c] : other.coeffs_) add_term(p, -c);
  constant_ -= other.constant_;
  return *this;
}

FormalLog& FormalLog::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    constant_ = 0;
    return *this;
  }
  for (auto& [p, v] : coeffs_) v *= c;
  constant_ *= c;
  return *this;
}

int FormalLog::sign() const {
  if (is_zero()) return 0;
  if (coeffs_.empty()) return sgn(constant_);
  // A nonzero formal sum has a nonzero real value, so this terminates.
  for (long bits = 64;; bits *= 2) {
    Mpfr lo(bits), hi(bits);
    evaluate(*this, bits, lo, hi);
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
    if (bits > (1L << 24)) throw std::logic_error("FormalLog::sign failed to separate from zero");
  }
}

Enclosure enclose(const FormalLog& value, long bits) {
  Mpfr lo(bits), hi(bits);
  evaluate(value, bits, lo, hi);
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

double FormalLog::to_double() const {
  Mpfr lo(192), hi(192);
  evaluate(*this, 192, lo, hi);
  return mpfr_get_d(lo.get(), MPFR_RNDN);
}

std::string FormalLog::decimal(int digits) const {
  if (is_zero()) return "0";
  Mpfr lo(256), hi(256);
  evaluate(*this, 256, lo, hi);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, lo.get());
  return std::string(buf.data());
}

std::string FormalLog::to_string() const {
  std::string out;
  auto append = [&](const Rational& c, const std::string& body, bool is_constant) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    std::string term = is_constant ? mag.get_str() : rational_coefficient_text(mag) + body;
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  };
  for (const auto& [p, c] : coeffs_) append(c, "log " + p.get_str(), false);
  if (constant_ != 0) append(constant_, "", true);
  return out.empty() ? "0" : out;
}

FormalLog FormalLog::parse(std::string_view text) {
  // Normalize the two multi-byte glyphs we emit or accept.
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 2, "\xC2\xB7") == 0) {  // middle dot
      s += '*';
      ++i;
    } else if (text.compare(i, 3, "\xE2\x88\x92") == 0) {  // minus sign
      s += '-';
      i += 2;
    } else {
      s += text[i];
    }
  }
  const std::string_view all = trim(s);
  if (all.empty()) throw ParseError("empty logarithmic expression");
  if (all == "0") return FormalLog{};

  FormalLog out;
  std::size_t pos = 0;
  bool first = true;
  while (pos < all.size()) {
    while (pos < all.size() && all[pos] == ' ') ++pos;
    int sign_factor = 1;
    if (pos < all.size() && (all[pos] == '+' || all[pos] == '-')) {
      sign_factor = all[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in '" + std::string(all) + "'");
    }
    first = false;
    // A term runs until the next top-level ' + ' / ' - '.
    std::size_t end = pos;
    int depth = 0;
    for (; end < all.size(); ++end) {
      if (all[end] == '(') ++depth;
      if (all[end] == ')') --depth;
      if (depth == 0 && end > pos && (all[end] == '+' || all[end] == '-') && all[end - 1] == ' ') break;
    }
    std::string_view term = trim(all.substr(pos, end - pos));
    pos = end;
    Rational coeff = 1;
    const auto log_at = term.find("log");
    if (log_at == std::string_view::npos) {
      std::string_view num = term;
      if (!num.empty() && num.front() == '(' && num.back() == ')') num = num.substr(1, num.size() - 2);
      out.constant_ += sign_factor * parse_rational(num);
      continue;
    }
    std::string_view head = trim(term.substr(0, log_at));
    if (!head.empty()) {
      if (head.back() != '*') throw ParseError("malformed term '" + std::string(term) + "'");
      head = trim(head.substr(0, head.size() - 1));
      if (!head.empty() && head.front() == '(' && head.back() == ')') head = head.substr(1, head.size() - 2);
      coeff = parse_rational(head);
    }
    const Integer p = parse_integer(term.substr(log_at + 3));
    if (!is_prime(p)) {
      // log n for composite n is accepted and expanded.
      out += FormalLog::log_abs(Rational(p)) * (coeff * sign_factor);
    } else {
      out.add_term(p, coeff * sign_factor);
    }
  }
  return out;
}

std::strong_ordering flog_compare(const FormalLog& a, const FormalLog& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

FormalLog flog_combine(std::span<const std::pair<Rational, FormalLog>> terms) {
  FormalLog out;
  for (const auto& [c, v] : terms) out += v * c;
  return out;
}

}  // namespace wproj
