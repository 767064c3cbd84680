#include "helpers.hpp"

namespace pifr {
namespace {

using test::P;
using test::V;

TEST(ConfidenceValue, DecimalsParseExactly) {
  EXPECT_EQ(V("0.80").rational(), Rational(4, 5));
  EXPECT_EQ(V("0.15").rational(), Rational(3, 20));
  EXPECT_EQ(V(".5").rational(), Rational(1, 2));
  EXPECT_EQ(V("1").rational(), Rational(1));
  EXPECT_EQ(V("1.000000").rational(), Rational(1));
  EXPECT_EQ(V("0.000001").rational(), Rational(1, 1000000));
  EXPECT_EQ(V("1/3").rational(), Rational(1, 3));
}

TEST(ConfidenceValue, RejectsBadLiterals) {
  EXPECT_PIFR_ERROR(V("1.5"), ValueOutOfRange);
  EXPECT_PIFR_ERROR(V("4/3"), ValueOutOfRange);
  EXPECT_PIFR_ERROR(V("0.1234567"), FormatError);
  EXPECT_PIFR_ERROR(V("-0.1"), FormatError);
  EXPECT_PIFR_ERROR(V("abc"), FormatError);
  EXPECT_PIFR_ERROR(V(""), FormatError);
  EXPECT_PIFR_ERROR(V("."), FormatError);
  EXPECT_PIFR_ERROR(V("1e-1"), FormatError);
  EXPECT_PIFR_ERROR(V("1/0"), FormatError);
  EXPECT_PIFR_ERROR(ConfidenceValue(1, 0), InvalidArgument);
  EXPECT_PIFR_ERROR(ConfidenceValue(2, 1), ValueOutOfRange);
}

TEST(ConfidenceValue, MinimalDigits) {
  EXPECT_EQ(V("0.80").to_string(), "0.8");
  EXPECT_EQ(V("1.0").to_string(), "1");
  EXPECT_EQ(V("0").to_string(), "0");
  EXPECT_EQ(V("0.05").to_string(), "0.05");
  EXPECT_EQ(V("1/8").to_string(), "0.125");
  EXPECT_EQ(V("1/3").to_string(), "1/3");
  EXPECT_EQ(V("2/6").to_string(), "1/3");
}

TEST(ConfidenceValue, ToStringRoundTrips) {
  for (std::int64_t d = 1; d <= 12; ++d) {
    for (std::int64_t n = 0; n <= d; ++n) {
      ConfidenceValue v(n, d);
      EXPECT_EQ(ConfidenceValue::parse(v.to_string()), v) << n << "/" << d;
    }
  }
}

TEST(ConfidenceValue, ComplementAndOrder) {
  EXPECT_EQ(V("0.3").complement(), V("0.7"));
  EXPECT_EQ(V("0").complement(), V("1"));
  EXPECT_LT(V("0.25"), V("1/3"));
  EXPECT_EQ(min(V("0.2"), V("0.7")), V("0.2"));
  EXPECT_EQ(max(V("0.2"), V("0.7")), V("0.7"));
}

TEST(ConfidencePair, Classification) {
  EXPECT_TRUE(P("0.2", "0.3").is_consistent());
  EXPECT_FALSE(P("0.2", "0.3").is_complete());
  EXPECT_TRUE(P("0.4", "0.6").is_total());
  EXPECT_FALSE(P("0.9", "0.8").is_consistent());
  EXPECT_TRUE(P("0.9", "0.8").is_complete());
  EXPECT_TRUE(ConfidencePair::none().is_consistent());
  EXPECT_FALSE(ConfidencePair::none().is_complete());
}

TEST(ConfidencePair, SwapAndText) {
  EXPECT_EQ(P("0.3", "0.6").swapped(), P("0.6", "0.3"));
  EXPECT_EQ(P("0.5", "0.20").to_string(), "<0.5, 0.2>");
  EXPECT_EQ(P("1", "0").to_string(), "<1, 0>");
}

}  // namespace
}  // namespace pifr
