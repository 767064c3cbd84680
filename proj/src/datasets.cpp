#include "pifr/datasets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pifr/error.hpp"
#include "pifr/relation_io.hpp"

namespace pifr {

namespace {

struct EmbeddedFile {
  std::string_view path;
  std::string_view text;
};

// Generated at configure time from data/.
constexpr EmbeddedFile kFiles[] = {
#include "embedded_data.inc"
};

ExampleData load(const std::string& name) {
  ExampleData d;
  d.name = name;
  const std::string dir = name + "/";
  const std::string expected_dir = dir + "expected/";
  for (const auto& f : kFiles) {
    std::string path(f.path);
    if (!path.starts_with(dir)) continue;
    std::string rest = path.substr(dir.size());
    auto stem = [](const std::string& file) { return file.substr(0, file.rfind('.')); };
    if (path.starts_with(expected_dir)) {
      d.expected.emplace(stem(path.substr(expected_dir.size())), std::string(f.text));
    } else if (rest.ends_with(".pifr")) {
      d.relations.emplace(stem(rest), std::string(f.text));
    } else if (rest == "query.pifq") {
      d.script = std::string(f.text);
    }
  }
  return d;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string diff(const std::string& expected, const std::string& actual) {
  auto e = lines(expected);
  auto a = lines(actual);
  std::set<std::string> es(e.begin(), e.end());
  std::set<std::string> as(a.begin(), a.end());
  std::string out;
  for (const auto& l : e) {
    if (!as.contains(l)) out += "- " + l + "\n";
  }
  for (const auto& l : a) {
    if (!es.contains(l)) out += "+ " + l + "\n";
  }
  return out;
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"example1", "tanks"};
  return names;
}

const ExampleData& example_data(std::string_view name) {
  static const std::map<std::string, ExampleData, std::less<>> all = [] {
    std::map<std::string, ExampleData, std::less<>> m;
    for (const auto& n : example_names()) m.emplace(n, load(n));
    return m;
  }();
  auto it = all.find(name);
  if (it == all.end()) fail(ErrorKind::InvalidArgument, "examples", "unknown example '" + std::string(name) + "'");
  return it->second;
}

std::string_view embedded_file(std::string_view path) {
  for (const auto& f : kFiles) {
    if (f.path == path) return f.text;
  }
  fail(ErrorKind::InvalidArgument, "examples", "no embedded file '" + std::string(path) + "'");
}

std::vector<std::string> embedded_paths() {
  std::vector<std::string> out;
  for (const auto& f : kFiles) out.emplace_back(f.path);
  return out;
}

Environment example_env(const ExampleData& data) {
  Environment env;
  for (const auto& [name, text] : data.relations) env.add(name, read_relation(text));
  return env;
}

ExampleReport replay_example(const ExampleData& data, const EvalOptions& options) {
  ExampleReport report;
  Environment scope = example_env(data);
  for (const auto& st : parse_script(data.script).statements) {
    RelationValue v = eval_query(st.expr, scope, options);
    if (st.target) scope.assign(*st.target, std::move(v));
  }
  for (const auto& [name, text] : data.expected) {
    report.text += name + ":\n";
    const RelationValue* v = scope.find(name);
    if (!v) {
      report.pass = false;
      report.text += "  not computed by the script\n";
      continue;
    }
    std::string actual = format_table(*v);
    report.text += actual;
    PifRelation want = read_relation(text);
    const auto* plain = std::get_if<PifRelation>(v);
    if (plain && *plain == want) {
      report.text += "match\n";
    } else {
      report.pass = false;
      report.text += "MISMATCH\n" + diff(format_table(want), actual);
    }
  }
  report.text += std::string("result: ") + (report.pass ? "PASS" : "FAIL") + "\n";
  return report;
}

}  // namespace pifr
