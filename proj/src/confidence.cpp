#include "pifr/confidence.hpp"

#include <cctype>

#include "pifr/error.hpp"

namespace pifr {

namespace {

constexpr int kMaxFractionDigits = 6;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::int64_t parse_integer(std::string_view digits, std::string_view original) {
  // Confidence literals never need more than this many digits.
  if (digits.size() > 15) {
    fail(ErrorKind::ValueOutOfRange, "core", "numeric literal too long: '" + std::string(original) + "'");
  }
  std::int64_t value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

std::int64_t pow10(int n) {
  std::int64_t p = 1;
  while (n-- > 0) p *= 10;
  return p;
}

}  // namespace

ConfidenceValue::ConfidenceValue(const Rational& value) : value_(value) {
  if (value_ < Rational(0) || value_ > Rational(1)) {
    fail(ErrorKind::ValueOutOfRange, "core",
         "confidence value " + std::to_string(value_.numerator()) + "/" +
             std::to_string(value_.denominator()) + " is outside [0,1]");
  }
}

ConfidenceValue::ConfidenceValue(std::int64_t numerator, std::int64_t denominator)
    : ConfidenceValue([&] {
        if (denominator == 0) fail(ErrorKind::InvalidArgument, "core", "zero denominator");
        return Rational(numerator, denominator);
      }()) {}

ConfidenceValue ConfidenceValue::parse(std::string_view text) {
  auto malformed = [&]() -> ConfidenceValue {
    fail(ErrorKind::FormatError, "core", "malformed confidence literal '" + std::string(text) + "'");
  };
  if (text.empty()) return malformed();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return malformed();
    std::int64_t d = parse_integer(den, text);
    if (d == 0) return malformed();
    return ConfidenceValue(parse_integer(num, text), d);
  }

  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view fraction = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (dot != std::string_view::npos) {
    if (whole.empty() && fraction.empty()) return malformed();
    if (!fraction.empty() && !all_digits(fraction)) return malformed();
    if (!whole.empty() && !all_digits(whole)) return malformed();
    if (fraction.size() > kMaxFractionDigits) {
      fail(ErrorKind::FormatError, "core",
           "confidence literal '" + std::string(text) + "' has more than 6 fractional digits");
    }
  } else if (!all_digits(whole)) {
    return malformed();
  }

  std::int64_t scale = pow10(static_cast<int>(fraction.size()));
  std::int64_t w = whole.empty() ? 0 : parse_integer(whole, text);
  std::int64_t f = fraction.empty() ? 0 : parse_integer(fraction, text);
  if (w > 1) {
    fail(ErrorKind::ValueOutOfRange, "core", "confidence value '" + std::string(text) + "' is outside [0,1]");
  }
  return ConfidenceValue(w * scale + f, scale);
}

ConfidenceValue ConfidenceValue::complement() const { return ConfidenceValue(Rational(1) - value_); }

std::string ConfidenceValue::to_string() const {
  const std::int64_t num = value_.numerator();
  const std::int64_t den = value_.denominator();
  for (int digits = 0; digits <= kMaxFractionDigits; ++digits) {
    std::int64_t scale = pow10(digits);
    if (scale % den != 0) continue;
    std::int64_t scaled = num * (scale / den);
    std::string out = std::to_string(scaled / scale);
    if (digits > 0) {
      std::string frac = std::to_string(scaled % scale);
      out += '.';
      out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
      out += frac;
    }
    return out;
  }
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string ConfidencePair::to_string() const {
  return "<" + belief.to_string() + ", " + doubt.to_string() + ">";
}

ConfidencePair make_pair(std::string_view belief, std::string_view doubt) {
  return {ConfidenceValue::parse(belief), ConfidenceValue::parse(doubt)};
}

}  // namespace pifr
