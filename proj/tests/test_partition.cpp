#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "swd/errors.hpp"
#include "swd/partition.hpp"

using namespace swd;
using P = Partition;

TEST_CASE("canonical form and validation") {
  CHECK(P({3, 1, 0, 0}) == P{3, 1});
  CHECK(P{}.size() == 0);
  CHECK(P{}.length() == 0);
  CHECK(P{4, 2, 2}.size() == 8);
  CHECK_THROWS_AS(P({1, 2}), ConstraintViolation);
  CHECK_THROWS_AS(P({2, -1}), ConstraintViolation);
  CHECK_THROWS_AS(P({2, 0, 1}), ConstraintViolation);
}

TEST_CASE("text format") {
  CHECK(P{3, 1, 1}.to_string() == "3,1,1");
  CHECK(P{}.to_string().empty());
  CHECK(P::parse("") == P{});
  CHECK(P::parse(" 2, 1 ") == P{2, 1});
  CHECK_THROWS_AS(P::parse("2,,1"), ParseError);
  CHECK_THROWS_AS(P::parse("1,2"), ParseError);
  CHECK_THROWS_AS(P::parse("a"), ParseError);
  for (const auto& lambda : partitions_up_to(7))
    CHECK(P::parse(lambda.to_string()) == lambda);
}

TEST_CASE("graded reverse-lex ordering") {
  CHECK(P{} < P{1});
  CHECK(P{3} < P{2, 1});
  CHECK(P{2, 1} < P{1, 1, 1});
  CHECK(P{1, 1, 1} < P{4});
}

TEST_CASE("contains") {
  CHECK(contains(P{}, P{2, 1}));
  CHECK(contains(P{2, 1}, P{2, 1}));
  CHECK_FALSE(contains(P{3}, P{2, 2}));
  CHECK_FALSE(contains(P{1, 1, 1}, P{2, 1}));
}

TEST_CASE("tilde") {
  CHECK(tilde(P{}, 3) == P{3});
  CHECK(tilde(P{2, 1}, 7) == P{4, 2, 1});
  CHECK_THROWS_AS(tilde(P{2, 1}, 4), ConstraintViolation);
  CHECK(tilde(P{2, 1}, 5) == P{2, 2, 1});
  for (const auto& lambda : partitions_up_to(5))
    for (int n = 0; n <= 12; ++n) {
      if (lambda[0] + lambda.size() > n)
        continue;
      const auto t = tilde(lambda, n);
      CHECK(t.size() == n);
      CHECK(t[0] == n - lambda.size());
    }
}

TEST_CASE("horizontal strips") {
  CHECK(remove_horizontal_strips(P{2}) == std::vector<P>{P{2}, P{1}, P{}});
  CHECK(remove_horizontal_strips(P{1, 1}) == std::vector<P>{P{1, 1}, P{1}});
  CHECK(remove_horizontal_strips(P{}) == std::vector<P>{P{}});
  CHECK(add_horizontal_strip(P{}, 2) == std::vector<P>{P{2}});
  CHECK(add_horizontal_strip(P{1}, 1) == std::vector<P>{P{2}, P{1, 1}});
  CHECK(add_horizontal_strip(P{2}, 0) == std::vector<P>{P{2}});
  CHECK(add_horizontal_strip(P{2, 1}, 2) == std::vector<P>{P{4, 1}, P{3, 2}, P{3, 1, 1}, P{2, 2, 1}});
}

TEST_CASE("strip removal and addition are adjoint") {
  const auto box = partitions_up_to(7);
  for (const auto& lambda : box) {
    const auto removed = remove_horizontal_strips(lambda);
    for (const auto& mu : box) {
      if (mu.size() > lambda.size())
        continue;
      const bool down = std::find(removed.begin(), removed.end(), mu) != removed.end();
      const auto added = add_horizontal_strip(mu, lambda.size() - mu.size());
      const bool up = std::find(added.begin(), added.end(), lambda) != added.end();
      CHECK_MESSAGE(down == up, lambda.to_string() << " / " << mu.to_string());
    }
  }
}

TEST_CASE("symmetric group dimensions") {
  CHECK(dim_symmetric_group_irrep(P{3}) == 1);
  CHECK(dim_symmetric_group_irrep(P{2, 1}) == 2);
  CHECK(dim_symmetric_group_irrep(P{2, 2}) == 2);
  CHECK(dim_symmetric_group_irrep(P{}) == 1);
  for (const auto& lambda : partitions_up_to(8))
    CHECK_MESSAGE(dim_symmetric_group_irrep(lambda) == oracle::count_standard_tableaux(lambda.parts()),
                  lambda.to_string());
  // Past 64-bit factorials.
  CHECK(dim_symmetric_group_irrep(P{25}) == 1);
  CHECK(dim_symmetric_group_irrep(P{24, 1}) == 24);
}

TEST_CASE("gl_N Schur module dimensions") {
  CHECK(dim_schur_gl(P{1}, 4) == 4);
  CHECK(dim_schur_gl(P{1, 1, 1}, 2) == 0);
  CHECK(dim_schur_gl(P{2, 1}, 2) == 2);
  CHECK(dim_schur_gl(P{}, 0) == 1);
  CHECK(dim_schur_gl(P{1}, 0) == 0);
  for (const auto& lambda : partitions_up_to(6))
    for (int N = 1; N <= 5; ++N)
      CHECK_MESSAGE(dim_schur_gl(lambda, N) == oracle::count_semistandard_tableaux(lambda, N),
                    lambda.to_string() << " N=" << N);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_partitions(3) == std::vector<P>{P{3}, P{2, 1}, P{1, 1, 1}});
  CHECK(enumerate_partitions(0) == std::vector<P>{P{}});
  CHECK(enumerate_partitions(4, 2) == std::vector<P>{P{4}, P{3, 1}, P{2, 2}});
  const long counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int d = 0; d <= 10; ++d) {
    const auto layer = enumerate_partitions(d);
    CHECK(static_cast<long>(layer.size()) == counts[d]);
    CHECK(std::is_sorted(layer.begin(), layer.end()));
  }
}

TEST_CASE("conjugate and binomials") {
  CHECK(conjugate(P{3, 1}) == P{2, 1, 1});
  CHECK(conjugate(P{}) == P{});
  for (const auto& lambda : partitions_up_to(6))
    CHECK(conjugate(conjugate(lambda)) == lambda);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(0) == 1);
}
