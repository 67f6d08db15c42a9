#include <map>

#include "doctest.h"
#include "latcross/formulas.hpp"
#include "latcross/oracle.hpp"

using namespace latcross;

TEST_CASE("line enumeration basics") {
  const auto tiny = oracle_g(1, 1, 0);
  REQUIRE(tiny.count(0) == 1);
  CHECK(tiny.at(0).to_text() == "1 + t*q");
  // No path with one up and one down step can cross y = 0.
  const auto it = tiny.find(1);
  CHECK((it == tiny.end() || it->second.is_zero()));

  const auto empty = oracle_g(0, 0, 5);
  CHECK(empty.at(0).to_text() == "1");

  // The sawtooth path has 4 descents, major index 21 and three crossings
  // of y = 1, so it shows up at every r up to 3.
  const auto saw = oracle_g(8, 6, 1);
  for (int r = 0; r <= 3; ++r) CHECK(saw.at(r).coeff(4, 21) >= 1);
}

TEST_CASE("enumeration is thread-count independent") {
  CHECK(oracle_g(5, 4, 1, 1) == oracle_g(5, 4, 1, 4));
  CHECK(oracle_h(Point{0, 1}, Point{1, 0}, Point{3, 2}, Point{2, 3}, 1) ==
        oracle_h(Point{0, 1}, Point{1, 0}, Point{3, 2}, Point{2, 3}, 4));
}

TEST_CASE("pair enumeration basics") {
  // Identical endpoints: the r = 0 slice counts all pairs.
  const auto same = oracle_h(Point{0, 0}, Point{0, 0}, Point{2, 2}, Point{2, 2});
  CHECK(same.at(0).value_at_one() == 6 * 6);

  // Two single-step rectangles that cannot interact.
  const auto apart = oracle_h(Point{0, 5}, Point{5, 0}, Point{1, 6}, Point{6, 1});
  CHECK(apart.at(0).value_at_one() == 2 * 2);
  const auto it = apart.find(1);
  CHECK((it == apart.end() || it->second.is_zero()));
}

TEST_CASE("closed forms match enumeration on a smoke window") {
  for (int ell = -3; ell <= 4; ++ell) {
    const auto ref = oracle_g(3, 2, ell);
    for (int r = 0; r <= 5; ++r) {
      const auto it = ref.find(r);
      const QTPoly want = it == ref.end() ? QTPoly{} : it->second;
      CHECK(g_poly(LineQuery{3, 2, ell, r}) == want);
    }
  }

  const auto ref = oracle_h(Point{0, 1}, Point{1, 0}, Point{4, 3}, Point{3, 4});
  for (int r = 0; r <= 4; ++r) {
    const auto it = ref.find(r);
    const QTPoly want = it == ref.end() ? QTPoly{} : it->second;
    CHECK(h_poly(make_pair_query(Point{0, 1}, Point{1, 0}, Point{4, 3}, Point{3, 4}, r)) == want);
  }
}

TEST_CASE("sweep reports") {
  const auto reports = sweep_verify_line(2, 2, 1, 4, 1);
  CHECK(!reports.empty());
  for (const auto& rep : reports) CHECK(rep.equal);
  const std::string line = reports.front().to_json_line();
  CHECK(line.find("\"equal\":true") != std::string::npos);
}
