#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pifr/query.hpp"

namespace pifr {

/// A bundled worked example: input relations, a query script, and the tables
/// the script must produce. All texts are compiled in from data/.
struct ExampleData {
  std::string name;
  std::map<std::string, std::string> relations;  // identifier -> .pifr text
  std::string script;
  std::map<std::string, std::string> expected;   // script variable -> .pifr text
};

/// "example1" (split/join/project/select on inconsistent relations) and
/// "tanks" (three-sensor fusion).
const std::vector<std::string>& example_names();
/// Throws InvalidArgument for an unknown name.
const ExampleData& example_data(std::string_view name);

/// The compiled-in copy of data/<path>, e.g. "tanks/GunData.pifr".
/// Throws InvalidArgument when no such file was embedded.
std::string_view embedded_file(std::string_view path);
std::vector<std::string> embedded_paths();

Environment example_env(const ExampleData& data);

struct ExampleReport {
  bool pass = true;
  std::string text;
};

/// Runs the script and compares every expected variable against its table.
/// The report lists each computed table, then "match" or a line diff
/// ("- " expected only, "+ " computed only).
ExampleReport replay_example(const ExampleData& data, const EvalOptions& options = {});

}  // namespace pifr
