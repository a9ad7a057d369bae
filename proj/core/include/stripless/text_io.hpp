#pragma once

#include <iosfwd>
#include <string>

#include "stripless/partition.hpp"
#include "stripless/tableau.hpp"

namespace stripless {

/// Tableau text format: one row per line, whitespace-separated entries,
/// '#' starts a comment, blank lines ignored; the shape is inferred.
Tableau parse_tableau(std::istream& in);
Tableau parse_tableau_file(const std::string& path);

/// One line per row, entries right-aligned to the widest entry, separated by
/// single spaces, each row terminated by a newline.
std::string render_tableau(const Tableau& t);

/// Comma-separated parts; the zero partition is spelled "0".
Partition parse_partition(const std::string& text);

}  // namespace stripless
