#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pifr/query.hpp"
#include "pifr/relation.hpp"

namespace pifr {

/// The .pifr text format, one declaration per line, '#' to end of line is a
/// comment, tokens separated by whitespace:
///
///   scheme X Y
///   domain X a b c
///   domain Y a b c
///   default 0 0          (optional, "0 0" when absent)
///   tuple a b 0.8 0.15
///
/// Grades are decimals with at most six fractional digits, or n/d for values
/// without such an expansion. Errors are prefixed with "line N:".
/// Throws FormatError, ValueOutsideDomain, ValueOutOfRange, DuplicateTuple.
PifRelation read_relation(std::string_view text);

/// Canonical text: scheme, domains, default, then rows in tuple order.
std::string write_relation(const PifRelation& r);

PifRelation read_relation_file(const std::filesystem::path& path);

/// Every *.pifr file in `directory`, bound to its file stem.
/// Throws FormatError (unreadable directory, stem not an identifier),
/// DuplicateIdentifier, DomainConflict, and any read_relation error.
Environment read_env(const std::filesystem::path& directory);

/// "(v1,...,vn) -> <b, d>" per stored row in tuple order, then
/// "default -> <b, d>". With `show_default`, every tuple of the product
/// space is listed (throws SpaceTooLarge above 10^6 tuples).
std::string format_table(const PifRelation& r, bool show_default = false);
std::string format_table(const AnnotatedRelation& r, bool show_default = false);
std::string format_table(const RelationValue& v, bool show_default = false);

}  // namespace pifr
