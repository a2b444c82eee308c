#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "helpers.hpp"
#include "tropical.hpp"
#include "verify.hpp"

using namespace polytrope;
using testing::mat;
using testing::point;
using testing::zero;

TEST_SUITE("tropical") {
  TEST_CASE("parse_rational accepts canonical and reducible input") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("+7") == 7);
    CHECK(format_rational(parse_rational("4/2")) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("--1"), Error);
  }

  TEST_CASE("eigenvalue") {
    CHECK(eigenvalue(mat({{"0", "-1"}, {"-1", "0"}})) == 0);
    CHECK(eigenvalue(zero(4)) == 0);
    CHECK(eigenvalue(mat({{"0", "3"}, {"2", "1"}})) == Rational(5, 2));
    CHECK(eigenvalue(mat({{"7/3"}})) == Rational(7, 3));
  }

  TEST_CASE("normalize") {
    CHECK(normalize(mat({{"0", "-1"}, {"-1", "0"}})) == mat({{"0", "-1"}, {"-1", "0"}}));
    CHECK(normalize(mat({{"0", "3"}, {"2", "1"}})) == mat({{"-5/2", "1/2"}, {"-1/2", "-3/2"}}));
    CHECK(normalize(mat({{"9/4"}})) == mat({{"0"}}));
  }

  TEST_CASE("trop_mat_mul") {
    const auto a = mat({{"0", "-1"}, {"-1", "0"}});
    CHECK(trop_mat_mul(a, a) == a);
    const auto b = mat({{"0", "3"}, {"2", "1"}});
    CHECK(trop_mat_mul(b, b) == mat({{"5", "4"}, {"3", "5"}}));
    CHECK(trop_mat_mul(zero(3), zero(3)) == zero(3));
  }

  TEST_CASE("kleene_plus and kleene_star") {
    const auto a = mat({{"0", "-1"}, {"-1", "0"}});
    CHECK(kleene_plus(a) == a);
    CHECK(kleene_star(a) == a);
    const auto b = normalize(mat({{"0", "3"}, {"2", "1"}}));
    CHECK(kleene_plus(b) == mat({{"0", "1/2"}, {"-1/2", "0"}}));
    CHECK(kleene_star(b) == mat({{"0", "1/2"}, {"-1/2", "0"}}));
    CHECK(kleene_star(zero(3)) == zero(3));
    try {
      kleene_plus(mat({{"1", "0"}, {"0", "0"}}));
      FAIL("expected a positive-cycle error");
    } catch (const Error& e) {
      CHECK(e.status() == Status::positive_cycle);
    }
  }

  TEST_CASE("star equals the power series") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 2 + trial % 4;
      const auto a = normalize(random_matrix(n, rng));
      TropMatrix sum = a;
      TropMatrix power = a;
      for (int k = 2; k <= n; ++k) {
        power = trop_mat_mul(power, a);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) sum(i, j) = std::max(sum(i, j), power(i, j));
      }
      CHECK(kleene_plus(a) == sum);
    }
  }

  TEST_CASE("polytrope_vertices") {
    const auto one = polytrope_vertices(mat({{"0", "3"}, {"2", "1"}}));
    REQUIRE(one.vertices.size() == 1);
    CHECK(one.vertices[0] == point({"0", "-1/2"}));
    const auto two = polytrope_vertices(mat({{"0", "-1"}, {"-1", "0"}}));
    REQUIRE(two.vertices.size() == 2);
    CHECK(two.vertices[0] == point({"0", "-1"}));
    CHECK(two.vertices[1] == point({"0", "1"}));
    const auto z = polytrope_vertices(zero(2));
    REQUIRE(z.vertices.size() == 1);
    CHECK(z.vertices[0] == point({"0", "0"}));
  }

  TEST_CASE("eigenspace_vertices") {
    CHECK(eigenspace_vertices(mat({{"0", "-1"}, {"-1", "0"}})).vertices.size() == 2);
    const auto b = eigenspace_vertices(mat({{"0", "3"}, {"2", "1"}}));
    REQUIRE(b.vertices.size() == 1);
    CHECK(b.vertices[0] == point({"0", "-1/2"}));
    CHECK(eigenspace_vertices(zero(3)).vertices.size() == 1);
  }

  TEST_CASE("check_eigenpair") {
    CHECK(check_eigenpair(mat({{"0", "3"}, {"2", "1"}}), point({"0", "-1/2"})));
    // Both rows attain max = lambda + x_i, so (0,0) is an eigenvector.
    CHECK(check_eigenpair(mat({{"0", "-1"}, {"-1", "0"}}), point({"0", "0"})));
    CHECK_FALSE(check_eigenpair(mat({{"0", "-1"}, {"-1", "0"}}), point({"0", "5"})));
    CHECK(check_eigenpair(zero(3), point({"0", "0", "0"})));
  }

  TEST_CASE("check_polytrope_member") {
    const auto a = mat({{"0", "-1"}, {"-1", "0"}});
    CHECK(check_polytrope_member(a, point({"0", "0"})));
    CHECK_FALSE(check_polytrope_member(a, point({"0", "5"})));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      const auto b = random_matrix(2 + trial % 3, rng);
      for (const auto& v : polytrope_vertices(b).vertices) CHECK(check_polytrope_member(b, v));
      for (const auto& v : eigenspace_vertices(b).vertices) CHECK(check_eigenpair(b, v));
    }
  }
}
