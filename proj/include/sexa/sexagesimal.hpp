#pragma once

// Exact rational numbers with base-60 parsing and rendering.
//
// Numerals follow the conventional transcription of cuneiform numbers:
// places are separated by ',' and the sexagesimal point is written ';'.
// "1,12;15" is 1*60 + 12 + 15/60.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sexa {

using BigInt = boost::multiprecision::cpp_int;

class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Malformed numeral or script text. `column` is 1-based; `line` is 0 when
/// the input is a single numeral.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t column, std::size_t line = 0)
      : std::runtime_error(describe(message, column, line)), message_(std::move(message)),
        column_(column), line_(line) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t column() const noexcept { return column_; }
  std::size_t line() const noexcept { return line_; }

private:
  static std::string describe(const std::string& message, std::size_t column, std::size_t line) {
    std::string where = line > 0 ? "line " + std::to_string(line) + ", column " : "column ";
    return where + std::to_string(column) + ": " + message;
  }

  std::string message_;
  std::size_t column_;
  std::size_t line_;
};

/// An exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class SexRational {
public:
  SexRational() : num_(0), den_(1) {}
  SexRational(long long value) : num_(value), den_(1) {}  // NOLINT(implicit)
  SexRational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(implicit)
  SexRational(BigInt numerator, BigInt denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
  }

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  SexRational operator-() const { return SexRational(-num_, den_, Reduced{}); }

  friend SexRational operator+(const SexRational& a, const SexRational& b) {
    return SexRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend SexRational operator-(const SexRational& a, const SexRational& b) {
    return SexRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend SexRational operator*(const SexRational& a, const SexRational& b) {
    return SexRational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend SexRational operator/(const SexRational& a, const SexRational& b) {
    if (b.is_zero()) throw DivisionByZero{};
    return SexRational(a.num_ * b.den_, a.den_ * b.num_);
  }

  SexRational& operator+=(const SexRational& o) { return *this = *this + o; }
  SexRational& operator-=(const SexRational& o) { return *this = *this - o; }
  SexRational& operator*=(const SexRational& o) { return *this = *this * o; }
  SexRational& operator/=(const SexRational& o) { return *this = *this / o; }

  friend bool operator==(const SexRational& a, const SexRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const SexRational& a, const SexRational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Largest integer not above the value.
  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_.sign() < 0 && q * den_ != num_) --q;
    return q;
  }

  /// Decimal rational form: "289/4", "-3", "0".
  std::string to_string() const {
    return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
  }

  /// Parses "p" or "p/q" in decimal.
  static SexRational from_string(std::string_view text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return SexRational(BigInt(std::string(text)));
      BigInt d(std::string(text.substr(slash + 1)));
      if (d.is_zero()) throw DivisionByZero{};
      return SexRational(BigInt(std::string(text.substr(0, slash))), std::move(d));
    } catch (const std::runtime_error&) {
      throw ParseError("not a decimal rational: '" + std::string(text) + "'", 1);
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const SexRational& q) {
    return os << q.to_string();
  }

private:
  struct Reduced {};
  SexRational(BigInt n, BigInt d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero{};
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    const BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline SexRational add(const SexRational& a, const SexRational& b) { return a + b; }
inline SexRational sub(const SexRational& a, const SexRational& b) { return a - b; }
inline SexRational mul(const SexRational& a, const SexRational& b) { return a * b; }
inline SexRational div(const SexRational& a, const SexRational& b) { return a / b; }

inline SexRational reciprocal(const SexRational& q) {
  if (q.is_zero()) throw DivisionByZero{};
  return SexRational(q.denominator(), q.numerator());
}

/// Strips every factor 2, 3 and 5 from n and returns what is left.
inline BigInt irregular_part(BigInt n) {
  for (const int p : {2, 3, 5}) {
    while (!n.is_zero() && n % p == 0) n /= p;
  }
  return n;
}

/// True iff n = 2^a 3^b 5^c, i.e. 1/n has a finite base-60 expansion.
inline bool is_regular(const BigInt& n) {
  if (n.sign() <= 0) throw std::invalid_argument("is_regular: n must be a positive integer");
  return irregular_part(n) == 1;
}

inline bool is_finite_sexagesimal(const SexRational& q) {
  return irregular_part(q.denominator()) == 1;
}

/// Place-value view of a rational. `truncated` is set when the fraction
/// places were cut off before the expansion terminated.
struct SexDigits {
  int sign = 1;
  std::vector<unsigned> integer_places{0};
  std::vector<unsigned> fraction_places;
  bool truncated = false;

  friend bool operator==(const SexDigits&, const SexDigits&) = default;
};

inline SexDigits to_digits(const SexRational& q, std::size_t max_fraction_places) {
  SexDigits out;
  out.sign = q.sign() < 0 ? -1 : 1;
  const BigInt num = boost::multiprecision::abs(q.numerator());
  const BigInt& den = q.denominator();

  BigInt whole = num / den;
  BigInt rem = num % den;

  out.integer_places.clear();
  if (whole.is_zero()) out.integer_places.push_back(0);
  while (!whole.is_zero()) {
    out.integer_places.push_back(static_cast<unsigned>(whole % 60));
    whole /= 60;
  }
  std::reverse(out.integer_places.begin(), out.integer_places.end());

  while (!rem.is_zero() && out.fraction_places.size() < max_fraction_places) {
    rem *= 60;
    out.fraction_places.push_back(static_cast<unsigned>(rem / den));
    rem %= den;
  }
  out.truncated = !rem.is_zero();
  if (!out.truncated) {
    while (!out.fraction_places.empty() && out.fraction_places.back() == 0) {
      out.fraction_places.pop_back();
    }
  }
  return out;
}

enum class SexMode { absolute, floating };

inline constexpr std::size_t kDefaultFractionPlaces = 20;
inline constexpr std::string_view kTruncationMarker = "…";

namespace detail {

inline void join_places(std::string& out, const std::vector<unsigned>& places,
                        std::size_t first, std::size_t last) {
  for (std::size_t i = first; i < last; ++i) {
    if (i != first) out += ',';
    out += std::to_string(places[i]);
  }
}

}  // namespace detail

/// Renders a rational in base 60.
///
/// Absolute mode writes the point: 72 -> "1,12", 1/9 -> "0;6,40".
/// Floating mode drops the point and the leading/terminal zero places, the
/// way a point-free tablet would write it: 72 -> "1,12", 1/9 -> "6,40".
/// Expansions longer than `max_fraction_places` end with "…".
inline std::string format_sex(const SexRational& q, SexMode mode = SexMode::absolute,
                              std::size_t max_fraction_places = kDefaultFractionPlaces) {
  const SexDigits d = to_digits(q, max_fraction_places);
  std::string out = d.sign < 0 ? "-" : "";

  if (mode == SexMode::absolute) {
    detail::join_places(out, d.integer_places, 0, d.integer_places.size());
    if (!d.fraction_places.empty()) {
      out += ';';
      detail::join_places(out, d.fraction_places, 0, d.fraction_places.size());
    }
  } else {
    std::vector<unsigned> words = d.integer_places;
    words.insert(words.end(), d.fraction_places.begin(), d.fraction_places.end());
    std::size_t first = 0;
    while (first + 1 < words.size() && words[first] == 0) ++first;
    std::size_t last = words.size();
    if (!d.truncated) {
      while (last > first + 1 && words[last - 1] == 0) --last;
    }
    detail::join_places(out, words, first, last);
  }
  if (d.truncated) out += kTruncationMarker;
  return out;
}

/// Parses `['-'] digits (',' digits)* [';' digits (',' digits)*]`, each
/// digit group a decimal integer in 0..59.
inline SexRational parse_sex(std::string_view text) {
  if (text.empty()) throw ParseError("empty numeral", 1);

  std::size_t pos = 0;
  const bool negative = text[0] == '-';
  if (negative) ++pos;

  BigInt value = 0;
  BigInt scale = 1;
  bool in_fraction = false;

  for (;;) {
    const std::size_t group_start = pos;
    unsigned group = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      group = group * 10 + static_cast<unsigned>(text[pos] - '0');
      if (group >= 60) {
        throw ParseError("digit group exceeds 59 in '" + std::string(text) + "'", group_start + 1);
      }
      ++pos;
    }
    if (pos == group_start) {
      throw ParseError("expected a digit group in '" + std::string(text) + "'", pos + 1);
    }
    value = value * 60 + group;
    if (in_fraction) scale *= 60;

    if (pos == text.size()) break;
    if (text[pos] == ',') {
      ++pos;
    } else if (text[pos] == ';' && !in_fraction) {
      in_fraction = true;
      ++pos;
    } else {
      throw ParseError(std::string("unexpected character '") + text[pos] + "' in '" +
                           std::string(text) + "'",
                       pos + 1);
    }
  }
  if (!in_fraction) scale = 1;
  return SexRational(negative ? BigInt(-value) : value, scale);
}

/// Evaluates an arithmetic expression over sexagesimal numerals with
/// + - * / and parentheses, e.g. "14,24 * 0;5".
inline SexRational evaluate(std::string_view expr) {
  struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
      while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) const {
      throw ParseError(what + " in '" + std::string(s) + "'", pos + 1);
    }

    SexRational expression() {
      SexRational acc = term();
      for (;;) {
        skip();
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
          const char op = s[pos++];
          const SexRational rhs = term();
          acc = op == '+' ? acc + rhs : acc - rhs;
        } else {
          return acc;
        }
      }
    }
    SexRational term() {
      SexRational acc = factor();
      for (;;) {
        skip();
        if (pos < s.size() && (s[pos] == '*' || s[pos] == '/')) {
          const char op = s[pos++];
          const SexRational rhs = factor();
          acc = op == '*' ? acc * rhs : acc / rhs;
        } else {
          return acc;
        }
      }
    }
    SexRational factor() {
      skip();
      if (pos >= s.size()) fail("unexpected end of expression");
      if (s[pos] == '-') {
        ++pos;
        return -factor();
      }
      if (s[pos] == '(') {
        ++pos;
        SexRational inner = expression();
        skip();
        if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
        ++pos;
        return inner;
      }
      const std::size_t start = pos;
      while (pos < s.size() && ((s[pos] >= '0' && s[pos] <= '9') || s[pos] == ',' || s[pos] == ';')) {
        ++pos;
      }
      if (pos == start) fail("expected a numeral");
      try {
        return parse_sex(s.substr(start, pos - start));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), start + e.column());
      }
    }
  };

  Parser p{expr};
  SexRational result = p.expression();
  p.skip();
  if (p.pos != expr.size()) p.fail("trailing input");
  return result;
}

}  // namespace sexa
