#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "pifr/datasets.hpp"
#include "pifr/error.hpp"
#include "pifr/props.hpp"
#include "pifr/relation_io.hpp"

namespace pifr::cli {

namespace {

struct EvalArgs {
  std::string env;
  std::string query;
  std::string query_file;
  std::string output;
  std::string format = "table";
  bool auto_split = false;
  bool show_default = false;
};

struct ClassifyArgs {
  std::string env;
  std::string relation;
  std::string file;
  std::size_t witnesses = 16;
};

struct PropsArgs {
  std::string suite;
  std::uint64_t cases = 100;
  std::uint64_t seed = 1;
  std::uint64_t grid = 4;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::FormatError, "cli", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_eval(const EvalArgs& a, std::ostream& out) {
  Environment env = a.env.empty() ? Environment{} : read_env(a.env);
  std::string text = a.query_file.empty() ? a.query : slurp(a.query_file);
  RelationValue result = eval_script(parse_script(text), env, {.auto_split = a.auto_split});

  std::string rendered;
  if (a.format == "pifr") {
    const auto* plain = std::get_if<PifRelation>(&result);
    if (!plain) {
      fail(ErrorKind::TypeMismatch, "cli", "an annotated result has no .pifr form; wrap the query in combine(...)");
    }
    rendered = write_relation(*plain);
  } else {
    rendered = format_table(result, a.show_default);
  }

  if (a.output.empty()) {
    out << rendered;
  } else {
    std::ofstream file(a.output, std::ios::binary);
    if (!file) fail(ErrorKind::FormatError, "cli", "cannot write " + a.output);
    file << rendered;
  }
  return kOk;
}

int run_classify(const ClassifyArgs& a, std::ostream& out) {
  PifRelation r = [&] {
    if (!a.file.empty()) return read_relation_file(a.file);
    if (a.env.empty() || a.relation.empty()) {
      fail(ErrorKind::InvalidArgument, "cli", "classify needs --file, or --env with --relation");
    }
    Environment env = read_env(a.env);
    const auto* plain = std::get_if<PifRelation>(&env.at(a.relation));
    if (!plain) fail(ErrorKind::TypeMismatch, "cli", "'" + a.relation + "' is annotated");
    return *plain;
  }();
  ConsistencyReport rep = classify(r, a.witnesses);
  auto flag = [](bool b) { return b ? "true" : "false"; };
  auto tuples = [&](const std::vector<Tuple>& ts) {
    std::string s;
    for (const auto& t : ts) s += " " + r.heading().render(t);
    return s.empty() ? std::string(" none") : s;
  };
  out << "scheme: " << r.scheme().to_string() << "\n";
  out << "consistent: " << flag(rep.consistent) << "\n";
  out << "complete: " << flag(rep.complete) << "\n";
  out << "total: " << flag(rep.total) << "\n";
  out << "inconsistent tuples:" << tuples(rep.inconsistent) << "\n";
  out << "incomplete tuples:" << tuples(rep.incomplete) << "\n";
  return kOk;
}

int run_examples(const std::string& which, bool auto_split, std::ostream& out) {
  std::vector<std::string> names = which == "all" ? example_names() : std::vector<std::string>{which};
  bool pass = true;
  for (const auto& n : names) {
    ExampleReport rep = replay_example(example_data(n), {.auto_split = auto_split});
    out << "== " << n << "\n" << rep.text;
    pass = pass && rep.pass;
  }
  return pass ? kOk : kCheckFailed;
}

int run_props(const PropsArgs& a, std::ostream& out) {
  std::vector<Suite> suites;
  if (a.suite == "all") {
    suites = all_suites();
  } else {
    suites.push_back(*parse_suite(a.suite));
  }
  bool pass = true;
  for (Suite s : suites) {
    SuiteReport rep = run_suite(s, {.cases = a.cases, .seed = a.seed, .grid = a.grid, .operators = {}});
    out << rep.to_string();
    pass = pass && rep.pass();
  }
  return pass ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Paraconsistent intuitionistic fuzzy relational engine", "pifr"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a query or script against a directory of .pifr files");
  eval->add_option("--env", eval_args.env, "Directory of .pifr files, bound by file stem")->check(CLI::ExistingDirectory);
  auto* q = eval->add_option("--query", eval_args.query, "Query or script text");
  auto* qf = eval->add_option("--query-file", eval_args.query_file, "File holding the query or script")
                 ->check(CLI::ExistingFile);
  q->excludes(qf);
  qf->excludes(q);
  eval->add_flag("--auto-split", eval_args.auto_split, "Evaluate each operator as combine(op(split(args)))");
  eval->add_flag("--show-default", eval_args.show_default, "List every tuple, including default-valued ones");
  eval->add_option("--output", eval_args.output, "Write the result here instead of standard output");
  eval->add_option("--format", eval_args.format, "table or pifr")->check(CLI::IsMember({"table", "pifr"}));

  ClassifyArgs classify_args;
  auto* cls = app.add_subcommand("classify", "Report consistency and completeness of a relation");
  cls->add_option("--env", classify_args.env, "Directory of .pifr files")->check(CLI::ExistingDirectory);
  cls->add_option("--relation", classify_args.relation, "Relation name within --env");
  cls->add_option("--file", classify_args.file, "A single .pifr file")->check(CLI::ExistingFile);
  cls->add_option("--witnesses", classify_args.witnesses, "Violating tuples to list per kind");

  std::string which = "all";
  bool examples_split = false;
  auto* ex = app.add_subcommand("examples", "Replay the bundled examples against their expected tables");
  ex->add_option("--which", which, "example1, tanks or all")->check(CLI::IsMember({"example1", "tanks", "all"}));
  ex->add_flag("--auto-split", examples_split, "Evaluate every operator through split/combine");

  PropsArgs props_args;
  std::vector<std::string> suite_names{"all"};
  for (Suite s : all_suites()) suite_names.push_back(to_string(s));
  auto* props = app.add_subcommand("props", "Run a randomized property suite");
  props->add_option("--suite", props_args.suite, "laws, weakgen, stronggen, pipeline, prdm-closure, singleton or all")
      ->required()
      ->check(CLI::IsMember(suite_names));
  props->add_option("--cases", props_args.cases, "Random cases (per operator where applicable)");
  props->add_option("--seed", props_args.seed, "Generator seed")->check(CLI::PositiveNumber);
  props->add_option("--grid", props_args.grid, "Grade grid k: values 0, 1/k, ..., 1")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) {
      if (eval_args.query.empty() && eval_args.query_file.empty()) {
        err << "eval: one of --query or --query-file is required\n";
        return kUsage;
      }
      return run_eval(eval_args, out);
    }
    if (*cls) return run_classify(classify_args, out);
    if (*ex) return run_examples(which, examples_split, out);
    return run_props(props_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace pifr::cli
