#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "helpers.hpp"
#include "pifr/datasets.hpp"
#include "pifr/props.hpp"
#include "pifr/relation_io.hpp"

namespace pifr {
namespace {

namespace fs = std::filesystem;
using test::P;

const fs::path kData = PIFR_DATA_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Scratch directory removed at scope exit.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("pifr_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

std::string error_text(const std::string& text) {
  try {
    read_relation(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(ReadRelation, BundledExampleR) {
  PifRelation r = read_relation_file(kData / "example1" / "R.pifr");
  EXPECT_EQ(r.entries().size(), 6u);
  EXPECT_EQ(r.default_value(), P("0", "0"));
  EXPECT_EQ(r.get({"c", "b"}), P("1", "1"));
}

TEST(ReadRelation, DefaultOnly) {
  PifRelation r = read_relation("scheme X\ndomain X a b\ndefault 0.5 0.25\n");
  EXPECT_TRUE(r.entries().empty());
  EXPECT_EQ(r.default_value(), P("0.5", "0.25"));
  EXPECT_EQ(read_relation("scheme X\ndomain X a b\n").default_value(), P("0", "0"));
}

TEST(ReadRelation, ExactDecimals) {
  PifRelation r = read_relation("scheme X Y\ndomain X a\ndomain Y a\ntuple a a 0.80 0.15\n");
  EXPECT_EQ(r.get({"a", "a"}).belief.rational(), Rational(4, 5));
  EXPECT_EQ(r.get({"a", "a"}).doubt.rational(), Rational(3, 20));
}

TEST(ReadRelation, CommentsAndWhitespace) {
  PifRelation r = read_relation("# header\n  scheme   X # trailing\n\ndomain X T-72 T-80\r\ntuple T-80 1 0 # row\n");
  EXPECT_EQ(r.get({"T-80"}), P("1", "0"));
}

TEST(ReadRelation, Errors) {
  EXPECT_PIFR_ERROR(read_relation(""), FormatError);
  EXPECT_PIFR_ERROR(read_relation("domain X a\n"), FormatError);
  EXPECT_PIFR_ERROR(read_relation("scheme X\n"), FormatError);
  EXPECT_PIFR_ERROR(read_relation("scheme X\nscheme Y\n"), FormatError);
  EXPECT_PIFR_ERROR(read_relation("scheme X\ndomain X a\ndomain X b\n"), FormatError);
  EXPECT_PIFR_ERROR(read_relation("scheme X\ndomain Y a\n"), FormatError);
  EXPECT_PIFR_ERROR(read_relation("scheme X\ndomain X a a\n"), FormatError);
  EXPECT_PIFR_ERROR(read_relation("scheme X-1\ndomain X-1 a\n"), FormatError);
  EXPECT_PIFR_ERROR(read_relation("scheme X\ndomain X a\nrow a 1 0\n"), FormatError);
  EXPECT_PIFR_ERROR(read_relation("scheme X\ndomain X a\ntuple a 1\n"), FormatError);
  EXPECT_PIFR_ERROR(read_relation("scheme X\ndomain X a\ntuple a one 0\n"), FormatError);
  EXPECT_PIFR_ERROR(read_relation("scheme X\ndomain X a\ndefault 0 0\ndefault 0 0\n"), FormatError);
  EXPECT_PIFR_ERROR(read_relation("scheme X\ndomain X a\ntuple b 1 0\n"), ValueOutsideDomain);
  EXPECT_PIFR_ERROR(read_relation("scheme X\ndomain X a\ntuple a 1.5 0\n"), ValueOutOfRange);
  EXPECT_PIFR_ERROR(read_relation("scheme X\ndomain X a\ntuple a 1 0\ntuple a 0 1\n"), DuplicateTuple);
}

TEST(ReadRelation, ErrorsNameTheLine) {
  EXPECT_NE(error_text("scheme X\ndomain X a\n\ntuple a 0.1234567 0\n").find("line 4"), std::string::npos);
  EXPECT_NE(error_text("scheme X\ndomain X a\ntuple z 1 0\n").find("line 3"), std::string::npos);
  EXPECT_NE(error_text("scheme X\ndomain X a\ntuple a 1 0\ntuple a 1 0\n").find("line 4"), std::string::npos);
}

TEST(WriteRelation, CanonicalText) {
  HeadingPtr h = make_heading(Scheme{"X"}, DomainMap{{"X", Domain{"b", "a"}}});
  PifRelation one = make_relation(h, P("0", "0"), {{{"a"}, P("1", "0")}, {{"b"}, P("0.50", "1/3")}});
  PifRelation two = make_relation(h, P("0", "0"), {{{"b"}, P("0.5", "1/3")}, {{"a"}, P("1.0", "0")}});
  EXPECT_EQ(write_relation(one), write_relation(two));
  EXPECT_EQ(write_relation(one), "scheme X\ndomain X b a\ndefault 0 0\ntuple b 0.5 1/3\ntuple a 1 0\n");
}

TEST(WriteRelation, RoundTripsBundledAndRandom) {
  for (const auto& path : embedded_paths()) {
    if (!path.ends_with(".pifr")) continue;
    std::string text(embedded_file(path));
    EXPECT_EQ(write_relation(read_relation(text)), text) << path;
  }
  Rng rng(9);
  GenConfig gen;
  gen.grid = 6;  // includes thirds, which need the n/d form
  for (int i = 0; i < 200; ++i) {
    PifRelation r = random_relation(rng, random_heading(rng, random_domains(rng, gen), gen), PairKind::Arbitrary, 6);
    EXPECT_EQ(read_relation(write_relation(r)), r);
  }
}

TEST(BundledData, FilesMatchEmbeddedCopies) {
  std::size_t seen = 0;
  for (const auto& path : embedded_paths()) {
    EXPECT_EQ(slurp(kData / path), embedded_file(path)) << path;
    ++seen;
  }
  EXPECT_EQ(seen, 14u);
}

TEST(ReadEnv, TankDirectory) {
  Environment env = read_env(kData / "tanks");
  std::vector<std::string> names;
  for (const auto& [n, v] : env.relations()) names.push_back(n);
  EXPECT_EQ(names, (std::vector<std::string>{"GunData", "GunRules", "RadarData", "RadarRules", "SpeedData", "SpeedRules"}));
  EXPECT_EQ(env.domains().at("Object"), (Domain{"T-60", "T-72", "T-80"}));
}

TEST(ReadEnv, EmptyAndErrors) {
  TempDir dir("env");
  EXPECT_TRUE(read_env(dir.path).empty());

  dir.write("A.pifr", "scheme Object\ndomain Object T-60 T-72\n");
  dir.write("B.pifr", "scheme Object\ndomain Object T-60 T-80\n");
  EXPECT_PIFR_ERROR(read_env(dir.path), DomainConflict);

  TempDir bad("stem");
  bad.write("my-rel.pifr", "scheme X\ndomain X a\n");
  EXPECT_PIFR_ERROR(read_env(bad.path), FormatError);
  EXPECT_PIFR_ERROR(read_env(bad.path / "missing"), FormatError);
}

TEST(FormatTable, RowsAndFooter) {
  PifRelation r = read_relation("scheme X Y\ndomain X a b\ndomain Y a\ntuple b a 0.5 0.25\n");
  EXPECT_EQ(format_table(r), "(b,a) -> <0.5, 0.25>\ndefault -> <0, 0>\n");
  EXPECT_EQ(format_table(r, true), "(a,a) -> <0, 0>\n(b,a) -> <0.5, 0.25>\ndefault -> <0, 0>\n");
  PifRelation inc = read_relation("scheme X\ndomain X a\ntuple a 0.9 0.8\n");
  EXPECT_EQ(format_table(split(inc)), "(a) -> {<0.2, 0.8>, <0.9, 0.1>}\ndefault -> {<0, 0>}\n");
}

}  // namespace
}  // namespace pifr
