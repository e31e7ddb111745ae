#include "swx/rational.hpp"

#include "swx/errors.hpp"

#include <cctype>

namespace swx {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::UnsupportedSignature: return "UnsupportedSignature";
    case ErrorCode::CupValidation: return "CupValidationError";
    case ErrorCode::Integrality: return "IntegralityError";
    case ErrorCode::NotCharacteristic: return "NotCharacteristic";
    case ErrorCode::InternalConsistency: return "InternalConsistencyError";
    case ErrorCode::NotInPositiveCone: return "NotInPositiveCone";
    case ErrorCode::PathLeavesCone: return "PathLeavesCone";
    case ErrorCode::OnWall: return "OnWall";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::Io: return "IoError";
  }
  return "Error";
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
  // cpp_rational is always kept normalized with a positive denominator.
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size())
    throw ValidationError("malformed rational '" + std::string(whole) + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ValidationError("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (ch - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(body, text));
  const Integer num = parse_integer(body.substr(0, slash), text);
  const std::string_view den_text = body.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text, text);
  if (den == 0)
    throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) throw ValidationError("empty coordinate list");
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

Integer to_integer(const Rational& q) {
  if (!is_integer(q))
    throw InternalConsistencyError("expected an integer, got " + to_string(q));
  return boost::multiprecision::numerator(q);
}

int sign(const Rational& q) { return q.sign(); }
int sign(const Integer& n) { return n.sign(); }

}  // namespace swx
