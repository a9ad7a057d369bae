#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "stripless/bijection.hpp"
#include "stripless/klyachko.hpp"
#include "stripless/text_io.hpp"

using namespace stripless;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Tableau load(const std::string& name) {
  std::istringstream in(read_file(name));
  return parse_tableau(in);
}

}  // namespace

TEST_CASE("block collapse of the worked standard tableau") {
  Tableau syt = load("appendix_syt.txt");
  REQUIRE(syt.is_standard());
  REQUIRE(descents(syt) == std::vector<int>{4, 13, 22});
  CHECK(descent_profile(syt).descents == std::vector<int>{4, 13, 22});
  Tableau blocks = syt_to_blocks(syt);
  Tableau expected{{{1, 1, 1, 1, 2, 2, 2, 2, 2, 2},
                    {2, 2, 2, 3, 3, 3, 3, 3, 3},
                    {3, 3, 3, 4},
                    {4, 4}}};
  CHECK(blocks == expected);
}

TEST_CASE("block collapse edge shapes") {
  CHECK(syt_to_blocks(Tableau{{{1, 2, 3}}}) == Tableau{{{1, 1, 1}}});
  CHECK(syt_to_blocks(Tableau{{{1}, {2}, {3}}}) == Tableau{{{1}, {2}, {3}}});
}

TEST_CASE("worked example maps to the strip-less filling byte for byte") {
  GrassmannianContext ctx(4, 14);
  Tableau syt = load("appendix_syt.txt");
  Tableau image = syt_to_stripless(syt, ctx);
  CHECK(render_tableau(image) == read_file("appendix_ssyt.txt"));
  CHECK(image.shape() == Partition{8, 6, 1});
  CHECK(is_one_strip_less(image, 10));
  CHECK(stripless_to_syt(image, ctx) == syt);
}

TEST_CASE("descent-count precondition") {
  GrassmannianContext ctx(4, 14);
  Tableau two_descents = load("two_descent_syt.txt");
  REQUIRE(descents(two_descents).size() == 2);
  GrassmannianContext ctx47(4, 7);
  CHECK_THROWS_AS(syt_to_stripless(two_descents, ctx47), std::domain_error);
  CHECK_THROWS_AS(syt_to_stripless(two_descents, ctx), std::domain_error);
}

TEST_CASE("strip-less precondition on the inverse direction") {
  GrassmannianContext ctx(2, 4);
  Tableau strippy{{{1, 1}, {2, 2}}};
  CHECK_THROWS_AS(stripless_to_syt(strippy, ctx), std::domain_error);
}

TEST_CASE("rank-one edge: single rows and all-ones fillings") {
  GrassmannianContext ctx(1, 5);
  Tableau row{{{1, 2, 3}}};
  Tableau image = syt_to_stripless(row, ctx);
  CHECK(image == Tableau{{{1}}});
  CHECK(stripless_to_syt(image, ctx) == row);

  // The full-row standard tableau pairs with the empty filling.
  Tableau full{{{1, 2, 3, 4}}};
  Tableau empty = syt_to_stripless(full, ctx);
  CHECK(empty.box_count() == 0);
  CHECK(stripless_to_syt(empty, ctx) == full);
}

TEST_CASE("rank-two toy case maps onto both single-box fillings") {
  GrassmannianContext ctx(2, 4);
  // Shape of the complement of (1) in the 2x2 square.
  std::vector<Tableau> images;
  enumerate_syt(Partition{2, 1}, [&](const Tableau& t) {
    if (descents(t).size() == 1) images.push_back(syt_to_stripless(t, ctx));
  });
  REQUIRE(images.size() == 2);
  CHECK(((images[0] == Tableau{{{1}}} && images[1] == Tableau{{{2}}}) ||
         (images[0] == Tableau{{{2}}} && images[1] == Tableau{{{1}}})));
}

TEST_CASE("roundtrips hold on every small shape") {
  for (int r = 1; r <= 3; ++r) {
    for (int n = r + 1; n <= 6; ++n) {
      GrassmannianContext ctx(r, n);
      for_each_partition_in_rectangle(r, n - r, [&](const Partition& mu) {
        Partition bar = complement(mu, ctx);
        long stripless_count = 0;
        enumerate_ssyt(mu, r, [&](const Tableau& t) {
          if (!is_one_strip_less(t, n - r)) return;
          ++stripless_count;
          Tableau syt = stripless_to_syt(t, ctx);
          CHECK(syt.shape() == bar);
          CHECK(syt_to_stripless(syt, ctx) == t);
        });
        long descent_count = 0;
        enumerate_syt(bar, [&](const Tableau& t) {
          if (static_cast<int>(descents(t).size()) != r - 1) return;
          if (t.box_count() < r) return;  // empty tableau at rank 1
          ++descent_count;
          Tableau ssyt = syt_to_stripless(t, ctx);
          CHECK(ssyt.shape() == mu);
          CHECK(stripless_to_syt(ssyt, ctx) == t);
        });
        CHECK(stripless_count == descent_count);
      });
    }
  }
}

TEST_CASE("descent counts recover the orbit coefficients") {
  for (int r = 2; r <= 3; ++r) {
    for (int n = r + 1; n <= 7; ++n) {
      GrassmannianContext ctx(r, n);
      for_each_partition_in_rectangle_of_size(
          r, n - r, (r - 1) * (n - r - 1), [&](const Partition& mu) {
            long with_descents = 0;
            enumerate_syt(complement(mu, ctx), [&](const Tableau& t) {
              if (static_cast<int>(descents(t).size()) == r - 1) ++with_descents;
            });
            CHECK(count_one_strip_less(mu, ctx) == with_descents);
          });
    }
  }
}
