#include "grassorbit/parse.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "grassorbit/error.hpp"

namespace grassorbit {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

[[noreturn]] void fail(std::string_view text, std::string_view why) {
  throw UsageError("cannot parse polynomial '" + std::string(text) + "': " + std::string(why));
}

std::uint64_t read_number(std::string_view s, std::size_t& pos, std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
  if (ec != std::errc()) fail(text, "expected a number");
  pos = static_cast<std::size_t>(ptr - s.data());
  return v;
}

Polynomial parse_human(const Field& field, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) fail(text, "empty input");
  Polynomial acc(field);
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      fail(text, "expected '+' or '-' between terms");
    }
    first = false;
    Code coeff = 1;
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      const std::uint64_t v = read_number(s, pos, text);
      if (v >= field.order()) fail(text, "coefficient " + std::to_string(v) + " outside field");
      coeff = static_cast<Code>(v);
      have_coeff = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    std::size_t degree = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
          fail(text, "expected exponent after '^'");
        }
        degree = read_number(s, pos, text);
        if (degree > 4096) fail(text, "exponent too large");
      }
    } else if (!have_coeff) {
      fail(text, "expected a term");
    }
    if (negative) coeff = field.neg(coeff);
    acc = acc + Polynomial::monomial(field, degree, coeff);
  }
  return acc;
}

Polynomial parse_list(const Field& field, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) fail(text, "empty input");
  std::vector<Code> coeffs;
  std::size_t pos = 0;
  while (true) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
      fail(text, "expected a coefficient");
    }
    const std::uint64_t v = read_number(s, pos, text);
    if (v >= field.order()) fail(text, "coefficient " + std::to_string(v) + " outside field");
    coeffs.push_back(static_cast<Code>(v));
    if (pos == s.size()) break;
    if (s[pos] != ',') fail(text, "expected ','");
    ++pos;
  }
  return Polynomial(field, std::move(coeffs));
}

}  // namespace

Polynomial parse_polynomial(const Field& field, std::string_view text) {
  if (text.find('x') != std::string_view::npos) return parse_human(field, text);
  // A lone "+"/"-" without x is still human form, e.g. "2-1".
  if (text.find_first_of("+-^") != std::string_view::npos) return parse_human(field, text);
  return parse_list(field, text);
}

std::vector<Polynomial> parse_polynomial_list(const Field& field, std::string_view text) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(';', start);
    out.push_back(parse_polynomial(field, text.substr(start, pos == std::string_view::npos
                                                                 ? std::string_view::npos
                                                                 : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace grassorbit
