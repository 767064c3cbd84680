#include "pifr/schema.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "pifr/error.hpp"

namespace pifr {

bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name[0]);
  if (!(std::isalpha(head) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Scheme::Scheme(std::vector<std::string> attributes) : attributes_(std::move(attributes)) {
  if (attributes_.empty()) fail(ErrorKind::InvalidArgument, "core", "scheme must not be empty");
  std::set<std::string> seen;
  for (const auto& a : attributes_) {
    if (!is_identifier(a)) fail(ErrorKind::InvalidArgument, "core", "invalid attribute name '" + a + "'");
    if (!seen.insert(a).second) fail(ErrorKind::InvalidArgument, "core", "duplicate attribute '" + a + "'");
  }
}

std::optional<std::size_t> Scheme::position(const std::string& name) const {
  auto it = std::find(attributes_.begin(), attributes_.end(), name);
  if (it == attributes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - attributes_.begin());
}

std::string Scheme::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (i) out += ", ";
    out += attributes_[i];
  }
  return out + ">";
}

Domain::Domain(std::vector<std::string> values) : values_(std::move(values)) {
  if (values_.empty()) fail(ErrorKind::InvalidArgument, "core", "domain must not be empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].empty()) fail(ErrorKind::InvalidArgument, "core", "empty domain value");
    if (!index_.emplace(values_[i], static_cast<ValueIndex>(i)).second) {
      fail(ErrorKind::InvalidArgument, "core", "duplicate domain value '" + values_[i] + "'");
    }
  }
}

std::optional<ValueIndex> Domain::index_of(const std::string& value) const {
  auto it = index_.find(value);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Heading::Heading(Scheme scheme, const DomainMap& domains) : scheme_(std::move(scheme)) {
  if (scheme_.size() == 0) fail(ErrorKind::InvalidArgument, "core", "scheme must not be empty");
  domains_.reserve(scheme_.size());
  for (const auto& a : scheme_.attributes()) {
    auto it = domains.find(a);
    if (it == domains.end()) fail(ErrorKind::UnknownAttribute, "core", "no domain declared for attribute '" + a + "'");
    domains_.push_back(it->second);
  }
}

DomainMap Heading::domain_map() const {
  DomainMap out;
  for (std::size_t i = 0; i < arity(); ++i) out.emplace(scheme_[i], domains_[i]);
  return out;
}

std::uint64_t Heading::space_size() const {
  std::uint64_t n = 1;
  for (const auto& d : domains_) {
    if (n > std::numeric_limits<std::uint64_t>::max() / d.size()) return std::numeric_limits<std::uint64_t>::max();
    n *= d.size();
  }
  return n;
}

Tuple Heading::tuple(std::span<const std::string> values) const {
  if (values.size() != arity()) {
    fail(ErrorKind::SchemeMismatch, "core",
         "tuple has " + std::to_string(values.size()) + " values but scheme " + scheme_.to_string() + " has " +
             std::to_string(arity()) + " attributes");
  }
  Tuple t;
  t.values.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto idx = domains_[i].index_of(values[i]);
    if (!idx) {
      fail(ErrorKind::ValueOutsideDomain, "core",
           "value '" + values[i] + "' is not in dom(" + scheme_[i] + ")");
    }
    t.values.push_back(*idx);
  }
  return t;
}

Tuple Heading::tuple(std::initializer_list<std::string> values) const {
  return tuple(std::span<const std::string>(values.begin(), values.size()));
}

std::vector<std::string> Heading::names(const Tuple& t) const {
  std::vector<std::string> out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(domains_[i][t[i]]);
  return out;
}

std::string Heading::render(const Tuple& t) const {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += domains_[i][t[i]];
  }
  return out + ")";
}

bool Heading::valid(const Tuple& t) const {
  if (t.size() != arity()) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= domains_[i].size()) return false;
  }
  return true;
}

HeadingPtr make_heading(Scheme scheme, const DomainMap& domains) {
  return std::make_shared<const Heading>(std::move(scheme), domains);
}

TupleOdometer::TupleOdometer(const Heading& heading, Tuple start, std::vector<bool> varying)
    : varying_(std::move(varying)), current_(std::move(start)) {
  sizes_.reserve(heading.arity());
  for (std::size_t i = 0; i < heading.arity(); ++i) sizes_.push_back(static_cast<ValueIndex>(heading.domain(i).size()));
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (varying_[i]) current_.values[i] = 0;
  }
}

TupleOdometer::TupleOdometer(const Heading& heading)
    : TupleOdometer(heading, Tuple{std::vector<ValueIndex>(heading.arity(), 0)},
                    std::vector<bool>(heading.arity(), true)) {}

void TupleOdometer::next() {
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    if (!varying_[i]) continue;
    if (++current_.values[i] < sizes_[i]) return;
    current_.values[i] = 0;
  }
  done_ = true;
}

std::vector<Tuple> extensions(const Tuple& t, std::span<const std::string> source, const Heading& target,
                              std::uint64_t limit) {
  if (source.empty()) fail(ErrorKind::SchemeMismatch, "core", "extensions of a tuple on the empty scheme");
  if (source.size() != t.size()) fail(ErrorKind::SchemeMismatch, "core", "tuple arity does not match its scheme");

  Tuple start{std::vector<ValueIndex>(target.arity(), 0)};
  std::vector<bool> varying(target.arity(), true);
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto pos = target.position(source[i]);
    if (!pos) fail(ErrorKind::SchemeMismatch, "core", "attribute '" + source[i] + "' is not in the target scheme");
    if (!varying[*pos]) fail(ErrorKind::SchemeMismatch, "core", "attribute '" + source[i] + "' repeated");
    if (t[i] >= target.domain(*pos).size()) {
      fail(ErrorKind::SchemeMismatch, "core", "tuple value out of range for attribute '" + source[i] + "'");
    }
    start.values[*pos] = t[i];
    varying[*pos] = false;
  }

  std::uint64_t count = 1;
  for (std::size_t i = 0; i < target.arity(); ++i) {
    if (!varying[i]) continue;
    count *= target.domain(i).size();
    if (count > limit) fail(ErrorKind::SpaceTooLarge, "core", "extension set exceeds enumeration limit");
  }

  std::vector<Tuple> out;
  out.reserve(static_cast<std::size_t>(count));
  for (TupleOdometer it(target, std::move(start), std::move(varying)); !it.done(); it.next()) {
    out.push_back(it.current());
  }
  return out;
}

std::vector<std::size_t> column_map(const Heading& from, const Scheme& to) {
  std::vector<std::size_t> cols;
  cols.reserve(to.size());
  for (const auto& a : to.attributes()) {
    auto pos = from.position(a);
    if (!pos) fail(ErrorKind::SchemeMismatch, "core", "attribute '" + a + "' missing from " + from.scheme().to_string());
    cols.push_back(*pos);
  }
  return cols;
}

Tuple permute(const Tuple& t, std::span<const std::size_t> columns) {
  Tuple out;
  out.values.reserve(columns.size());
  for (auto c : columns) out.values.push_back(t[c]);
  return out;
}

HeadingPtr join_heading(const Heading& left, const Heading& right) {
  std::vector<std::string> attrs = left.scheme().attributes();
  DomainMap domains = left.domain_map();
  for (std::size_t i = 0; i < right.arity(); ++i) {
    const auto& a = right.attribute(i);
    if (auto pos = left.position(a)) {
      if (!(left.domain(*pos) == right.domain(i))) {
        fail(ErrorKind::DomainConflict, "algebra", "attribute '" + a + "' has different domains in the join arguments");
      }
      continue;
    }
    attrs.push_back(a);
    domains.emplace(a, right.domain(i));
  }
  return make_heading(Scheme(std::move(attrs)), domains);
}

HeadingPtr project_heading(const Heading& from, const std::vector<std::string>& attributes) {
  if (attributes.empty()) fail(ErrorKind::SchemeMismatch, "algebra", "projection onto the empty scheme");
  for (const auto& a : attributes) {
    if (!from.position(a)) {
      fail(ErrorKind::UnknownAttribute, "algebra", "attribute '" + a + "' not in scheme " + from.scheme().to_string());
    }
  }
  std::set<std::string> seen(attributes.begin(), attributes.end());
  if (seen.size() != attributes.size()) fail(ErrorKind::SchemeMismatch, "algebra", "projection list repeats an attribute");
  return make_heading(Scheme(attributes), from.domain_map());
}

std::vector<std::size_t> alignment(const Heading& target, const Heading& other) {
  if (target.arity() != other.arity()) {
    fail(ErrorKind::SchemeMismatch, "algebra",
         "schemes " + target.scheme().to_string() + " and " + other.scheme().to_string() + " differ");
  }
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < target.arity(); ++i) {
    auto pos = other.position(target.attribute(i));
    if (!pos) {
      fail(ErrorKind::SchemeMismatch, "algebra",
           "schemes " + target.scheme().to_string() + " and " + other.scheme().to_string() + " differ");
    }
    if (!(other.domain(*pos) == target.domain(i))) {
      fail(ErrorKind::DomainConflict, "algebra", "attribute '" + target.attribute(i) + "' has different domains");
    }
    cols.push_back(*pos);
  }
  return cols;
}

}  // namespace pifr
