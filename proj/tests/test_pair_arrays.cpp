#include <functional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "latcross/errors.hpp"
#include "latcross/pair_arrays.hpp"

using namespace latcross;

namespace {

ArrayPair sample_pair() {
  return ArrayPair(TwoRowedArray(0, 2, 10, 7, Bracket::XU_YV, {3, 6}, {2, 4}),
                   TwoRowedArray(2, 0, 8, 8, Bracket::XU_YV, {3, 4, 7, 8}, {2, 5, 6, 7}));
}

Errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::mixed_alphabet;
}

}  // namespace

TEST_CASE("pair construction and shape parameters") {
  const ArrayPair ap = sample_pair();
  CHECK(ap.k() == 0);
  CHECK(ap.n() == 6);
  CHECK(ap.entry_sum() == (3 + 6 + 2 + 4) + (3 + 4 + 7 + 8 + 2 + 5 + 6 + 7));

  // Opposite imbalance is required.
  CHECK_THROWS_AS(ArrayPair(TwoRowedArray(0, 0, 3, 3, Bracket::XU_YV, {1}, {}),
                            TwoRowedArray(0, 0, 3, 3, Bracket::XU_YV, {1}, {})),
                  std::invalid_argument);
  // Only the XU_YV bracket participates in pairs.
  CHECK_THROWS_AS(ArrayPair(TwoRowedArray(0, 0, 3, 3, Bracket::XV_YU, {}, {}),
                            TwoRowedArray(0, 0, 3, 3, Bracket::XU_YV, {}, {})),
                  std::invalid_argument);
  CHECK_NOTHROW(ArrayPair(TwoRowedArray(0, 0, 3, 3, Bracket::XU_YV, {1}, {}),
                          TwoRowedArray(0, 0, 3, 3, Bracket::XU_YV, {}, {1})));
}

TEST_CASE("alternating comparison") {
  CHECK(alt_less({3, 2, 0, 2}, {3, 2, 2, 0}));
  CHECK(alt_less({2, 2, 0}, {4, 3, 2, 0, 2}));
  CHECK_FALSE(alt_less({}, {}));
  CHECK_FALSE(alt_less({1, 2}, {1, 2}));
  CHECK_FALSE(alt_less({5}, {}));
  // First letters differ: plain comparison.
  CHECK(alt_less({1, 9}, {2, 0}));
  // Tie on the head swaps the roles for the tails.
  CHECK(alt_less({4, 7}, {4, 5}));
  CHECK_FALSE(alt_less({4, 5}, {4, 7}));
}

TEST_CASE("pair crossings in row coordinates") {
  const ArrayPair ap = sample_pair();
  const auto crs = pair_array_crossings(ap);
  REQUIRE(crs.size() == 3);
  CHECK(crs[0] == PairCrossing{CrossKind::downward, Point{3, 4}, 2, 1, 1});
  CHECK(crs[1] == PairCrossing{CrossKind::upward, Point{6, 6}, 2, 3, 2});
  CHECK(crs[2] == PairCrossing{CrossKind::downward, Point{8, 7}, 3, 4, 3});

  const auto path_level = pair_crossings(ap);
  REQUIRE(path_level.size() == 3);
  CHECK(path_level[0] == Crossing{CrossKind::downward, Point{3, 4}, 1});
  CHECK(path_level[1] == Crossing{CrossKind::upward, Point{6, 6}, 2});
  CHECK(path_level[2] == Crossing{CrossKind::downward, Point{8, 7}, 3});

  // The encoding of the underlying path pair reproduces the sample.
  const LatticePath p = parse_path("EEENNEEENNNEEEE", Point{0, 2});
  const LatticePath q = parse_path("NNENNNENEEENEN", Point{2, 0});
  CHECK(encode_pair(p, q) == ap);
}

TEST_CASE("tail swap across the pair") {
  const ArrayPair ap = sample_pair();

  CHECK(thrown_code([&] { gamma(1, ap); }) == Errc::wrong_kind);   // downward
  CHECK(thrown_code([&] { delta(2, ap); }) == Errc::wrong_kind);   // upward
  CHECK(thrown_code([&] { gamma(4, ap); }) == Errc::no_such_crossing);
  CHECK(thrown_code([&] { delta(4, ap); }) == Errc::no_such_crossing);
  // Crossing 3 touches the bounds (e_4 = 8 is the second upper x-bound and
  // d_3 extends to the first upper y-bound), so delta rejects it.
  CHECK(thrown_code([&] { delta(3, ap); }) == Errc::improper_crossing);
  CHECK_THROWS_AS(gamma(0, ap), std::invalid_argument);

  const ArrayPair g2 = gamma(2, ap);
  CHECK(g2 == ArrayPair(TwoRowedArray(0, 2, 8, 8, Bracket::XU_YV, {3, 6, 7, 8}, {2, 4, 7}),
                        TwoRowedArray(2, 0, 10, 7, Bracket::XU_YV, {3, 4}, {2, 5, 6})));
  CHECK(g2.k() == -1);
  CHECK(g2.entry_sum() == ap.entry_sum());
  CHECK(gamma(2, g2) == ap);  // involution

  const ArrayPair d1 = delta(1, g2);
  CHECK(d1 == ArrayPair(TwoRowedArray(0, 2, 10, 7, Bracket::XU_YV, {3, 4}, {2, 4, 5, 6}),
                        TwoRowedArray(2, 0, 8, 8, Bracket::XU_YV, {3, 6, 7, 8}, {2, 7})));
  CHECK(d1.k() == 2);
  CHECK(delta(1, d1) == g2);  // involution

  // The companion swap is the conjugate of gamma by the exchange map.
  CHECK(d1 == sigma(gamma(1, sigma(g2))));
}

TEST_CASE("component exchange") {
  const ArrayPair ap = sample_pair();
  const ArrayPair sw = sigma(ap);
  CHECK(sw.first() == ap.second());
  CHECK(sw.second() == ap.first());
  CHECK(sw.k() == -ap.k());
  CHECK(sigma(sw) == ap);

  // Kinds flip in place, vertices stay.
  const auto before = pair_array_crossings(ap);
  const auto after = pair_array_crossings(sw);
  REQUIRE(before.size() == after.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    CHECK(after[i].kind != before[i].kind);
    CHECK(after[i].vertex == before[i].vertex);
    CHECK(after[i].index == before[i].index);
  }
}

TEST_CASE("boundary swap on shared bounds") {
  const ArrayPair up0(TwoRowedArray(0, 0, 4, 3, Bracket::XU_YV, {2}, {1}),
                      TwoRowedArray(0, 0, 4, 3, Bracket::XU_YV, {2, 4}, {1, 2}));
  const ArrayPair upm1(TwoRowedArray(0, 0, 4, 3, Bracket::XU_YV, {2, 4}, {1}),
                       TwoRowedArray(0, 0, 4, 3, Bracket::XU_YV, {2}, {1, 2}));
  CHECK(up0.k() == 0);
  CHECK(upm1.k() == -1);
  CHECK(gamma0(up0) == upm1);
  CHECK(gamma0(upm1) == up0);

  // Equal arrays, downward-class pairs, and distinct bounds lie outside the
  // domain.
  const TwoRowedArray same(0, 0, 4, 3, Bracket::XU_YV, {2}, {1});
  CHECK(thrown_code([&] { gamma0(ArrayPair(same, same)); }) == Errc::not_in_domain);
  CHECK(thrown_code([&] { gamma0(sigma(up0)); }) == Errc::not_in_domain);
  CHECK(thrown_code([&] {
          gamma0(ArrayPair(TwoRowedArray(0, 0, 4, 3, Bracket::XU_YV, {2}, {1}),
                           TwoRowedArray(0, 1, 4, 3, Bracket::XU_YV, {2, 4}, {1, 2})));
        }) == Errc::not_in_domain);
}

TEST_CASE("pair enumeration") {
  long long count = 0;
  for_each_pair(0, 1, 3, 4, 1, 0, 4, 3, 2, 0, [&](const ArrayPair& ap) {
    ++count;
    CHECK(ap.n() == 2);
    CHECK(ap.k() == 0);
  });
  CHECK(count == 99);

  count = 0;
  for_each_pair(0, 1, 3, 4, 1, 0, 4, 3, 2, 1, [&](const ArrayPair& ap) {
    ++count;
    CHECK(ap.k() == 1);
  });
  CHECK(count == 54);
}
