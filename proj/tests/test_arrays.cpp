#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "latcross/arrays.hpp"
#include "latcross/errors.hpp"

using namespace latcross;

namespace {

long long binom(int m, int n) {
  if (n < 0 || n > m) return 0;
  long long r = 1;
  for (int i = 0; i < n; ++i) r = r * (m - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("construction enforces the bracket relations") {
  CHECK_NOTHROW(TwoRowedArray(0, 0, 3, 4, Bracket::XU_YV, {1, 3}, {0, 3}));
  CHECK_NOTHROW(TwoRowedArray(0, 0, 3, 4, Bracket::XU_YV, {}, {}));
  // Top row: x < c_1 < ... <= u (XU_YV) or < v (XV_YU).
  CHECK_THROWS_AS(TwoRowedArray(0, 0, 3, 4, Bracket::XU_YV, {0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(TwoRowedArray(0, 0, 3, 4, Bracket::XU_YV, {2, 2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(TwoRowedArray(0, 0, 3, 4, Bracket::XU_YV, {4}, {}), std::invalid_argument);
  CHECK_NOTHROW(TwoRowedArray(0, 0, 3, 4, Bracket::XV_YU, {3}, {}));
  CHECK_THROWS_AS(TwoRowedArray(0, 0, 3, 4, Bracket::XV_YU, {4}, {}), std::invalid_argument);
  // Bottom row: y <= d_1 < ... < v (XU_YV) or <= u (XV_YU).
  CHECK_THROWS_AS(TwoRowedArray(0, 0, 3, 4, Bracket::XU_YV, {}, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(TwoRowedArray(0, 0, 3, 4, Bracket::XU_YV, {}, {4}), std::invalid_argument);
  CHECK_NOTHROW(TwoRowedArray(0, 0, 3, 4, Bracket::XU_YV, {}, {3}));
  CHECK_NOTHROW(TwoRowedArray(0, 0, 3, 4, Bracket::XV_YU, {}, {3}));
  CHECK_THROWS_AS(TwoRowedArray(0, 0, 3, 4, Bracket::XV_YU, {}, {4}), std::invalid_argument);
}

TEST_CASE("sentinel-extended row access") {
  const TwoRowedArray a(1, 0, 7, 8, Bracket::XU_YV, {2, 3, 4, 6}, {0, 1, 4, 5});
  CHECK(a.c_at(0) == 1);  // lower bound x
  CHECK(a.d_at(0) == 0);  // lower bound y
  CHECK(a.c_at(1) == 2);
  CHECK(a.c_at(4) == 6);
  CHECK(a.c_at(5) == 7);   // past the row: closing bound u
  CHECK(a.d_at(5) == 8);   // past the row: closing bound v
  CHECK(a.entry_sum() == 25);
  CHECK(a.min_len() == 4);
  CHECK(a.bottom_touches_y());

  const TwoRowedArray b(0, 0, 3, 4, Bracket::XV_YU, {1, 2}, {1, 3});
  CHECK(b.c_at(3) == 4);  // XV_YU closes the top row with v
  CHECK(b.d_at(3) == 3);  // and the bottom row with u
  CHECK_FALSE(b.bottom_touches_y());
}

TEST_CASE("crossings read off the rows") {
  const TwoRowedArray a(1, 0, 7, 8, Bracket::XU_YV, {2, 3, 4, 6}, {0, 1, 4, 5});
  const auto crs = array_crossings(a);
  REQUIRE(crs.size() == 3);
  CHECK(crs[0] == ArrayCrossing{CrossKind::upward, true, 2, 3, 1});
  CHECK(crs[1] == ArrayCrossing{CrossKind::downward, false, 4, 5, 2});
  CHECK(crs[2] == ArrayCrossing{CrossKind::upward, true, 4, 6, 3});
  CHECK(crs[0].to_crossing() == Crossing{CrossKind::upward, Point{3, 3}, 1});

  // Crossings alternate in kind along any array.
  for_each_array(0, 0, 4, 4, Bracket::XU_YV, 2, 3, [](const TwoRowedArray& arr) {
    const auto cs = array_crossings(arr);
    for (std::size_t i = 1; i < cs.size(); ++i) CHECK(cs[i].kind != cs[i - 1].kind);
  });

  // Merged tail: c_m == d_m == d_{m+1} makes the truncated path's last two
  // east runs pass through the diagonal vertex, a downward crossing the row
  // inequalities alone would miss. Its entry is the bound u, so not proper.
  const TwoRowedArray tail(1, 0, 5, 6, Bracket::XV_YU, {5}, {5});
  const auto tcrs = array_crossings(tail);
  REQUIRE(tcrs.size() == 2);
  CHECK(tcrs[0] == ArrayCrossing{CrossKind::upward, true, 0, 1, 1});
  CHECK(tcrs[1] == ArrayCrossing{CrossKind::downward, false, 2, 5, 2});
}

TEST_CASE("valley encoding round trip") {
  const LatticePath p = parse_path("ENENNNENEENNNE", Point{1, 0});
  const TwoRowedArray enc = encode_path(p);
  CHECK(enc == TwoRowedArray(1, 0, 7, 8, Bracket::XU_YV, {2, 3, 4, 6}, {0, 1, 4, 5}));
  CHECK(decode_array(enc).word() == p.word());
  CHECK(decode_array(enc).start() == p.start());

  // Exhaustive round trip on a window, with the major index identity
  // maj = entry sum - (number of valleys) * (x + y).
  for_each_path(Point{0, 1}, Point{4, 4}, [](const std::vector<Step>& steps) {
    const LatticePath path(Point{0, 1}, steps, false);
    const TwoRowedArray a = encode_path(path);
    CHECK(a.len_c() == a.len_d());
    CHECK(decode_array(a) == path);
    CHECK(path_stats(path).maj == a.entry_sum() - a.min_len() * (0 + 1));
  });
  for_each_array(0, 0, 4, 4, Bracket::XU_YV, 2, 2, [](const TwoRowedArray& a) {
    CHECK(encode_path(decode_array(a)) == a);
  });

  CHECK(decode_array(TwoRowedArray(0, 0, 2, 3, Bracket::XU_YV, {}, {})).word() == "NNNEE");

  CHECK_THROWS_AS(decode_array(TwoRowedArray(0, 0, 3, 4, Bracket::XV_YU, {1}, {1})), Error);
  try {
    decode_array(TwoRowedArray(0, 0, 3, 4, Bracket::XU_YV, {1, 2}, {1}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::shape_mismatch);
  }
}

TEST_CASE("truncation to the shared-length prefix") {
  const TwoRowedArray a(0, 0, 2, 3, Bracket::XU_YV, {2}, {1});
  const LatticePath t = truncate_array(a);
  CHECK(t.start() == Point{0, 0});
  CHECK(t.word() == "NEENN");
  CHECK(t.end() == Point{2, 3});

  // Unequal rows: only the first min_len valleys survive.
  const TwoRowedArray b(0, 2, 7, 5, Bracket::XU_YV, {1, 4, 5, 7}, {2, 3});
  const LatticePath tb = truncate_array(b);
  CHECK(tb.start() == Point{0, 2});
  CHECK(tb.word() == "ENEEENNE");
  CHECK(tb.end() == Point{5, 5});
}

TEST_CASE("top and bottom row swaps") {
  const TwoRowedArray a(0, 0, 2, 3, Bracket::XU_YV, {2}, {1});
  const auto crs = array_crossings(a);
  REQUIRE(crs.size() == 2);
  CHECK(crs[0] == ArrayCrossing{CrossKind::downward, false, 1, 1, 1});
  CHECK(crs[1] == ArrayCrossing{CrossKind::upward, true, 1, 2, 2});

  // The second crossing sits on the closing bound u, so alpha rejects it.
  try {
    alpha(2, a);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::improper_crossing);
  }
  try {
    alpha(1, a);  // first crossing is downward
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::wrong_kind);
  }
  try {
    beta(2, a);  // second crossing is upward
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::wrong_kind);
  }
  try {
    alpha(3, a);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_such_crossing);
  }
  CHECK_THROWS_AS(alpha(0, a), std::invalid_argument);
  CHECK_THROWS_AS(beta(-1, a), std::invalid_argument);

  const TwoRowedArray swapped = beta(1, a);
  CHECK(swapped == TwoRowedArray(0, 0, 2, 3, Bracket::XV_YU, {}, {1, 2}));
  CHECK(beta(1, swapped) == a);  // involution

  // Row swaps preserve the leading crossings up to the swap ordinal.
  const auto after = array_crossings(swapped);
  REQUIRE(!after.empty());
  CHECK(after[0].kind == CrossKind::downward);
  CHECK(after[0].value == 1);

  // A full swap at an upward crossing whose top row closes at or below the
  // entry would lose the crossing, so alpha refuses even though the entry
  // itself stays clear of the bounds.
  const TwoRowedArray pinch(3, -3, 6, 2, Bracket::XV_YU, {}, {});
  const auto pcrs = array_crossings(pinch);
  REQUIRE(pcrs.size() == 1);
  CHECK(pcrs[0] == ArrayCrossing{CrossKind::upward, true, 0, 3, 1});
  try {
    alpha(1, pinch);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::improper_crossing);
  }
  try {
    beta(1, pinch);  // the crossing is upward
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::wrong_kind);
  }

  // Upward swap at the head of the rows exchanges them whole.
  const TwoRowedArray head(1, 0, 5, 6, Bracket::XU_YV, {}, {3});
  const TwoRowedArray head_img = alpha(1, head);
  CHECK(head_img == TwoRowedArray(1, 0, 5, 6, Bracket::XV_YU, {3}, {}));
  CHECK(alpha(1, head_img) == head);  // involution
}

TEST_CASE("bound reflection") {
  const TwoRowedArray a(0, 0, 3, 3, Bracket::XU_YV, {1}, {2});
  const TwoRowedArray ra = nu(a);
  CHECK(ra == TwoRowedArray(-3, -3, 0, 0, Bracket::XU_YV, {-2}, {-1}));
  CHECK(nu(ra) == a);

  const TwoRowedArray b(0, 0, 3, 4, Bracket::XV_YU, {1, 2}, {1, 3});
  const TwoRowedArray rb = nu(b);
  CHECK(rb == TwoRowedArray(-4, -3, 0, 0, Bracket::XV_YU, {-2, -1}, {-3, -1}));
  CHECK(nu(rb) == b);

  // Balanced arrays: the reflected crossing list is the reverse of the
  // original with kinds flipped and values negated.
  for (int lc = 0; lc <= 3; ++lc) {
    for_each_array(0, 1, 4, 5, Bracket::XU_YV, lc, lc, [](const TwoRowedArray& arr) {
      CHECK(nu(nu(arr)) == arr);
      const auto orig = array_crossings(arr);
      const auto refl = array_crossings(nu(arr));
      REQUIRE(orig.size() == refl.size());
      for (std::size_t i = 0; i < orig.size(); ++i) {
        const auto& o = orig[orig.size() - 1 - i];
        CHECK(refl[i].kind != o.kind);
        CHECK(refl[i].value == -o.value);
      }
    });
  }
}

TEST_CASE("array enumeration counts") {
  long long count = 0;
  for_each_array(0, 0, 3, 4, Bracket::XU_YV, 2, 2,
                 [&](const TwoRowedArray&) { ++count; });
  CHECK(count == binom(3, 2) * binom(4, 2));  // rows from (0,3] and [0,4)

  count = 0;
  for_each_array(0, 0, 3, 4, Bracket::XV_YU, 2, 2,
                 [&](const TwoRowedArray&) { ++count; });
  CHECK(count == binom(3, 2) * binom(4, 2));  // rows from (0,4) and [0,3]

  count = 0;
  for_each_array(0, 0, 3, 4, Bracket::XU_YV, 0, 0, [&](const TwoRowedArray& a) {
    ++count;
    CHECK(a.len_c() == 0);
    CHECK(a.len_d() == 0);
  });
  CHECK(count == 1);
}

TEST_CASE("display rendering") {
  const TwoRowedArray a(0, 0, 2, 3, Bracket::XU_YV, {2}, {1});
  const std::string shown = a.to_display();
  CHECK(shown.find('2') != std::string::npos);
  CHECK(shown.find('0') != std::string::npos);
}
