#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace pifr {

using Rational = boost::rational<std::int64_t>;

/// An exact rational in [0,1]. Closed under min, max and complement, so no
/// operation in the algebra ever rounds.
class ConfidenceValue {
 public:
  constexpr ConfidenceValue() = default;

  /// Throws ValueOutOfRange outside [0,1], InvalidArgument for a zero denominator.
  explicit ConfidenceValue(const Rational& value);
  ConfidenceValue(std::int64_t numerator, std::int64_t denominator);

  static ConfidenceValue zero() { return ConfidenceValue(); }
  static ConfidenceValue one() { return ConfidenceValue(1, 1); }

  /// Parses "1", "0.80", ".5" (at most 6 fractional digits) or "n/d".
  /// No binary rounding happens anywhere: "0.80" is exactly 4/5.
  static ConfidenceValue parse(std::string_view text);

  const Rational& rational() const noexcept { return value_; }

  /// 1 - x
  ConfidenceValue complement() const;

  /// Minimal-digit decimal ("0", "1", "0.05"), or "n/d" when the value has no
  /// terminating decimal expansion with at most 6 fractional digits.
  std::string to_string() const;

  friend bool operator==(const ConfidenceValue& a, const ConfidenceValue& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ConfidenceValue& a, const ConfidenceValue& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

inline ConfidenceValue min(const ConfidenceValue& a, const ConfidenceValue& b) { return b < a ? b : a; }
inline ConfidenceValue max(const ConfidenceValue& a, const ConfidenceValue& b) { return a < b ? b : a; }

/// The annotation <belief, doubt> carried by every tuple. Both components
/// range independently over [0,1].
struct ConfidencePair {
  ConfidenceValue belief;
  ConfidenceValue doubt;

  static ConfidencePair none() { return {}; }

  Rational sum() const { return belief.rational() + doubt.rational(); }
  bool is_consistent() const { return sum() <= Rational(1); }
  bool is_complete() const { return sum() >= Rational(1); }
  bool is_total() const { return sum() == Rational(1); }

  /// <doubt, belief>
  ConfidencePair swapped() const { return {doubt, belief}; }

  /// "<b, d>"
  std::string to_string() const;

  friend bool operator==(const ConfidencePair&, const ConfidencePair&) = default;
  friend auto operator<=>(const ConfidencePair&, const ConfidencePair&) = default;
};

ConfidencePair make_pair(std::string_view belief, std::string_view doubt);

}  // namespace pifr
