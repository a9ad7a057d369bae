#pragma once

#include <vector>

#include "stripless/partition.hpp"
#include "stripless/tableau.hpp"

namespace stripless {

/// The strictly increasing descent set of a standard tableau.
struct DescentProfile {
  std::vector<int> descents;
};

DescentProfile descent_profile(const Tableau& t);

/// Collapses the entry blocks delimited by the descents of a standard
/// tableau to 1, 2, ..., r; the result is semistandard.
Tableau syt_to_blocks(const Tableau& t);

/// Maps a standard tableau of complement shape with exactly r-1 descents to
/// the 1-strip-less SSYT of the complementary shape, via the rotated
/// column-complement filling of the full rectangle.
Tableau syt_to_stripless(const Tableau& t, const GrassmannianContext& ctx);

/// Inverse map: complement the filling column by column, rotate back, and
/// number the boxes entry block by entry block, left to right.
Tableau stripless_to_syt(const Tableau& t, const GrassmannianContext& ctx);

}  // namespace stripless
