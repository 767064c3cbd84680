#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pifr {

using ValueIndex = std::uint32_t;

/// Ordered, non-empty sequence of distinct attribute names. Order matters only
/// for display and for positional tuple literals.
class Scheme {
 public:
  Scheme() = default;
  /// Throws InvalidArgument when empty, a name is not an identifier, or a name repeats.
  explicit Scheme(std::vector<std::string> attributes);
  Scheme(std::initializer_list<std::string> attributes)
      : Scheme(std::vector<std::string>(attributes)) {}

  const std::vector<std::string>& attributes() const noexcept { return attributes_; }
  std::size_t size() const noexcept { return attributes_.size(); }
  const std::string& operator[](std::size_t i) const { return attributes_[i]; }
  std::optional<std::size_t> position(const std::string& name) const;
  bool contains(const std::string& name) const { return position(name).has_value(); }

  std::string to_string() const;  // "<X, Y>"

  friend bool operator==(const Scheme&, const Scheme&) = default;

 private:
  std::vector<std::string> attributes_;
};

bool is_identifier(const std::string& name);

/// Finite, non-empty, ordered set of constant symbols.
class Domain {
 public:
  Domain() = default;
  /// Throws InvalidArgument when empty or a value repeats.
  explicit Domain(std::vector<std::string> values);
  Domain(std::initializer_list<std::string> values) : Domain(std::vector<std::string>(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  const std::string& operator[](ValueIndex i) const { return values_[i]; }
  const std::vector<std::string>& values() const noexcept { return values_; }
  std::optional<ValueIndex> index_of(const std::string& value) const;

  friend bool operator==(const Domain& a, const Domain& b) { return a.values_ == b.values_; }

 private:
  std::vector<std::string> values_;
  std::map<std::string, ValueIndex> index_;
};

using DomainMap = std::map<std::string, Domain>;

/// A tuple stores, per attribute position of its heading, the index of its
/// value in that attribute's domain. Comparison is lexicographic in attribute
/// order then declared domain order.
struct Tuple {
  std::vector<ValueIndex> values;

  std::size_t size() const noexcept { return values.size(); }
  ValueIndex operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend bool operator<(const Tuple& a, const Tuple& b) { return a.values < b.values; }
};

/// A scheme together with the domain of each of its attributes.
class Heading {
 public:
  /// Throws UnknownAttribute when an attribute has no declared domain.
  Heading(Scheme scheme, const DomainMap& domains);

  const Scheme& scheme() const noexcept { return scheme_; }
  std::size_t arity() const noexcept { return scheme_.size(); }
  const std::string& attribute(std::size_t i) const { return scheme_[i]; }
  const Domain& domain(std::size_t i) const { return domains_[i]; }
  std::optional<std::size_t> position(const std::string& name) const { return scheme_.position(name); }

  /// The domains of this heading's attributes only.
  DomainMap domain_map() const;

  /// |tau(scheme)|, saturating at UINT64_MAX.
  std::uint64_t space_size() const;

  /// Builds a tuple from positional value names; throws ValueOutsideDomain / SchemeMismatch.
  Tuple tuple(std::span<const std::string> values) const;
  Tuple tuple(std::initializer_list<std::string> values) const;
  std::vector<std::string> names(const Tuple& t) const;
  /// "(a,b,c)"
  std::string render(const Tuple& t) const;

  /// True when every index is in range and the arity matches.
  bool valid(const Tuple& t) const;

  friend bool operator==(const Heading& a, const Heading& b) {
    return a.scheme_ == b.scheme_ && a.domains_ == b.domains_;
  }

 private:
  Scheme scheme_;
  std::vector<Domain> domains_;
};

using HeadingPtr = std::shared_ptr<const Heading>;

HeadingPtr make_heading(Scheme scheme, const DomainMap& domains);

/// Lexicographic walk over the product of per-position ranges [0, size_i).
/// Positions not marked varying keep the starting tuple's value.
class TupleOdometer {
 public:
  TupleOdometer(const Heading& heading, Tuple start, std::vector<bool> varying);
  explicit TupleOdometer(const Heading& heading);

  const Tuple& current() const noexcept { return current_; }
  bool done() const noexcept { return done_; }
  void next();

 private:
  std::vector<ValueIndex> sizes_;
  std::vector<bool> varying_;
  Tuple current_;
  bool done_ = false;
};

/// t^target: every tuple on `target` that agrees with `t` (a tuple on the
/// attributes `source`, in that order) on the source attributes. Ordered
/// lexicographically. Throws SchemeMismatch unless source is non-empty and a
/// subset of target with matching arity; SpaceTooLarge above `limit` tuples.
std::vector<Tuple> extensions(const Tuple& t, std::span<const std::string> source, const Heading& target,
                              std::uint64_t limit = 10'000'000);

/// Position in `from` of each attribute of `to`; throws SchemeMismatch if one is missing.
std::vector<std::size_t> column_map(const Heading& from, const Scheme& to);

Tuple permute(const Tuple& t, std::span<const std::size_t> columns);

/// Heading of a natural join: left's attributes, then right's attributes not
/// in left. Throws DomainConflict when a shared attribute has different domains.
HeadingPtr join_heading(const Heading& left, const Heading& right);

/// Heading on `attributes` (in that order). Throws UnknownAttribute for a name
/// outside `from`, SchemeMismatch for an empty or repeating list.
HeadingPtr project_heading(const Heading& from, const std::vector<std::string>& attributes);

/// Checks that `other` covers the same attributes with the same domains as
/// `target` (order may differ) and returns the column map from `other` to
/// `target`. Throws SchemeMismatch / DomainConflict.
std::vector<std::size_t> alignment(const Heading& target, const Heading& other);

}  // namespace pifr
