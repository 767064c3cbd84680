#include "pifr/relation_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "pifr/error.hpp"

namespace pifr {

namespace {

constexpr const char* kModule = "io";
constexpr std::uint64_t kTableLimit = 1'000'000;

[[noreturn]] void format_error(std::size_t line, const std::string& msg) {
  fail(ErrorKind::FormatError, kModule, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

// Rethrows library errors raised while handling one line with its number.
template <class F>
auto at_line(std::size_t line, F f) {
  try {
    return f();
  } catch (const Error& e) {
    std::string what = e.what();
    // Drop the "module: Kind: " prefix of the inner message.
    auto cut = what.find(": ");
    cut = cut == std::string::npos ? 0 : what.find(": ", cut + 2);
    std::string msg = cut == std::string::npos ? what : what.substr(cut + 2);
    fail(e.kind() == ErrorKind::InvalidArgument ? ErrorKind::FormatError : e.kind(), kModule,
         "line " + std::to_string(line) + ": " + msg);
  }
}

ConfidencePair parse_pair(std::size_t line, const std::string& b, const std::string& d) {
  return at_line(line, [&] { return ConfidencePair{ConfidenceValue::parse(b), ConfidenceValue::parse(d)}; });
}

std::string pair_words(const ConfidencePair& p) { return p.belief.to_string() + " " + p.doubt.to_string(); }

template <class V, class Show>
std::string table(const SparseRelation<V>& r, bool show_default, Show show) {
  std::string out;
  const Heading& h = r.heading();
  if (show_default) {
    if (h.space_size() > kTableLimit) {
      fail(ErrorKind::SpaceTooLarge, kModule, "product space too large to list every tuple");
    }
    for (TupleOdometer it(h); !it.done(); it.next()) {
      out += h.render(it.current()) + " -> " + show(r.get(it.current())) + "\n";
    }
  } else {
    for (const auto& [t, v] : r.entries()) out += h.render(t) + " -> " + show(v) + "\n";
  }
  out += "default -> " + show(r.default_value()) + "\n";
  return out;
}

}  // namespace

PifRelation read_relation(std::string_view text) {
  std::optional<Scheme> scheme;
  std::size_t scheme_line = 0;
  DomainMap domains;
  std::optional<ConfidencePair> default_pair;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> tuple_lines;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;
    const std::string& head = words.front();

    if (head == "scheme") {
      if (scheme) format_error(line_no, "second scheme line (first on line " + std::to_string(scheme_line) + ")");
      if (words.size() < 2) format_error(line_no, "scheme needs at least one attribute");
      scheme = at_line(line_no, [&] { return Scheme(std::vector<std::string>(words.begin() + 1, words.end())); });
      scheme_line = line_no;
    } else if (head == "domain") {
      if (!scheme) format_error(line_no, "domain line before the scheme line");
      if (words.size() < 3) format_error(line_no, "domain needs an attribute and at least one value");
      const std::string& attr = words[1];
      if (!scheme->contains(attr)) format_error(line_no, "domain for '" + attr + "', which is not in the scheme");
      if (domains.contains(attr)) format_error(line_no, "second domain line for '" + attr + "'");
      domains.emplace(attr, at_line(line_no, [&] { return Domain(std::vector<std::string>(words.begin() + 2, words.end())); }));
    } else if (head == "default") {
      if (default_pair) format_error(line_no, "second default line");
      if (words.size() != 3) format_error(line_no, "default takes a belief and a doubt");
      default_pair = parse_pair(line_no, words[1], words[2]);
    } else if (head == "tuple") {
      if (!scheme) format_error(line_no, "tuple line before the scheme line");
      if (words.size() != scheme->size() + 3) {
        format_error(line_no, "tuple needs " + std::to_string(scheme->size()) + " value(s), a belief and a doubt");
      }
      tuple_lines.emplace_back(line_no, std::move(words));
    } else {
      format_error(line_no, "unknown declaration '" + head + "'");
    }
  }

  if (!scheme) format_error(line_no, "missing scheme line");
  for (const auto& a : scheme->attributes()) {
    if (!domains.contains(a)) format_error(line_no, "missing domain line for '" + a + "'");
  }
  HeadingPtr heading = make_heading(*scheme, domains);
  ConfidencePair dflt = default_pair.value_or(ConfidencePair::none());

  std::map<Tuple, ConfidencePair> entries;
  for (const auto& [n, words] : tuple_lines) {
    std::span<const std::string> values(words.data() + 1, scheme->size());
    Tuple t = at_line(n, [&] { return heading->tuple(values); });
    ConfidencePair p = parse_pair(n, words[words.size() - 2], words.back());
    if (!entries.emplace(t, p).second) {
      fail(ErrorKind::DuplicateTuple, kModule, "line " + std::to_string(n) + ": tuple " + heading->render(t) + " repeated");
    }
  }
  return PifRelation(heading, dflt, std::move(entries));
}

std::string write_relation(const PifRelation& r) {
  const Heading& h = r.heading();
  std::string out = "scheme";
  for (const auto& a : h.scheme().attributes()) out += " " + a;
  out += "\n";
  for (std::size_t i = 0; i < h.arity(); ++i) {
    out += "domain " + h.attribute(i);
    for (const auto& v : h.domain(i).values()) out += " " + v;
    out += "\n";
  }
  out += "default " + pair_words(r.default_value()) + "\n";
  for (const auto& [t, p] : r.entries()) {
    out += "tuple";
    for (const auto& v : h.names(t)) out += " " + v;
    out += " " + pair_words(p) + "\n";
  }
  return out;
}

PifRelation read_relation_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::FormatError, kModule, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return read_relation(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), kModule, path.filename().string() + ": " + e.what());
  }
}

Environment read_env(const std::filesystem::path& directory) {
  std::error_code ec;
  if (!std::filesystem::is_directory(directory, ec)) {
    fail(ErrorKind::FormatError, kModule, "not a directory: " + directory.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pifr") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  Environment env;
  for (const auto& f : files) {
    std::string stem = f.stem().string();
    if (!is_identifier(stem)) fail(ErrorKind::FormatError, kModule, "file name '" + stem + "' is not an identifier");
    env.add(stem, read_relation_file(f));
  }
  return env;
}

std::string format_table(const PifRelation& r, bool show_default) {
  return table(r, show_default, [](const ConfidencePair& p) { return p.to_string(); });
}

std::string format_table(const AnnotatedRelation& r, bool show_default) {
  return table(r, show_default, [](const AnnotationSet& s) { return s.to_string(); });
}

std::string format_table(const RelationValue& v, bool show_default) {
  return std::visit([&](const auto& r) { return format_table(r, show_default); }, v);
}

}  // namespace pifr
