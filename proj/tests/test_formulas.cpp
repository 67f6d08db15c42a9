#include <stdexcept>

#include "doctest.h"
#include "latcross/arrays.hpp"
#include "latcross/errors.hpp"
#include "latcross/formulas.hpp"
#include "latcross/paths.hpp"

using namespace latcross;

namespace {

// Direct descents/major-index sum over a rectangle of paths.
QTPoly rect_sum(int a, int b) {
  QTPoly total;
  for_each_path(Point{0, 0}, Point{b, a}, [&](const std::vector<Step>& steps) {
    const PathStats s = path_stats(LatticePath(Point{0, 0}, steps, false));
    total.add_term(1, s.des, s.maj);
  });
  return total;
}

bool coeffs_nonneg(const QTPoly& p) {
  for (const auto& [key, c] : p.terms())
    if (c < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("rectangle generating polynomial") {
  CHECK(lemma_qbin2(0, 0).to_text() == "1");
  CHECK(lemma_qbin2(1, 1).to_text() == "1 + t*q");
  CHECK(lemma_qbin2(2, 2).to_text() == "1 + t*q + 2*t*q^2 + t*q^3 + t^2*q^4");
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) CHECK(lemma_qbin2(a, b) == rect_sum(a, b));
}

TEST_CASE("one-row closed sums") {
  // Top row of length 2 in (0, 3]: row sums 3, 4, 5.
  QTPoly expected = QTPoly::monomial(1, 0, 3);
  expected += QTPoly::monomial(1, 0, 4);
  expected += QTPoly::monomial(1, 0, 5);
  CHECK(lemma_sum_closed(IntervalKind::XU, 0, 7, 3, 9, 2) == expected);
  // Bottom row of length 2 in [1, 4): same three rows.
  CHECK(lemma_sum_closed(IntervalKind::YV, 9, 1, 9, 4, 2) == expected);
  // Empty row: one empty sequence for every kind, even when the interval
  // itself is empty or inverted.
  CHECK(lemma_sum_closed(IntervalKind::XV, 0, 0, 3, 3, 0).to_text() == "1");
  CHECK(lemma_sum_closed(IntervalKind::XU, 5, 0, 2, 9, 0).to_text() == "1");
  CHECK(lemma_sum_closed(IntervalKind::YV, 0, 4, 3, 1, 0).to_text() == "1");
  CHECK(lemma_sum_closed(IntervalKind::XV, 2, 0, 2, 2, 0).to_text() == "1");
  CHECK(lemma_sum_closed(IntervalKind::YU, 0, 6, 3, 9, 0).to_text() == "1");
  // Negative entries would demand negative q-exponents.
  CHECK_THROWS_AS(lemma_sum_closed(IntervalKind::YV, 0, -1, 0, 1, 2), std::domain_error);
}

TEST_CASE("two-row closed sums") {
  // Rows of length 1 between (0,0) and (2,2), weight q^(entry sum).
  QTPoly expected = QTPoly::monomial(1, 0, 1);
  expected += QTPoly::monomial(2, 0, 2);
  expected += QTPoly::monomial(1, 0, 3);
  CHECK(lemma_sum_array(0, 0, 2, 2, 1, 0, false) == expected);

  // Direct enumeration over a bigger window, both bracket shapes.
  for (const bool xv_yu : {false, true}) {
    const int x = 0, y = 1, u = 4, v = 5, n = 2, k = 1;
    QTPoly direct;
    const Bracket br = xv_yu ? Bracket::XV_YU : Bracket::XU_YV;
    for_each_array(x, y, u, v, br, n + k, n - k, [&](const TwoRowedArray& arr) {
      direct.add_term(1, 0, static_cast<int>(arr.entry_sum()) - n * (x + y));
    });
    CHECK(lemma_sum_array(x, y, u, v, n, k, xv_yu) == direct);
  }

  // An empty top row next to a full bottom row: the single array with top ()
  // and bottom (0,1,2,3) contributes q^6 although the top interval is empty.
  CHECK(lemma_sum_array(0, 0, 3, 0, 2, -2, true) == QTPoly::monomial(1, 0, 6));
  // Rows still exist but the closed form would need q^-2; it must refuse.
  CHECK_THROWS_AS(lemma_sum_array(3, 0, 1, 5, 1, -1, false), std::domain_error);
  // Row lengths below zero leave nothing to sum.
  CHECK(lemma_sum_array(0, 0, 4, 4, 1, 2, false).is_zero());
}

TEST_CASE("line polynomial structure") {
  CHECK(g_poly(LineQuery{1, 1, 0, 0}).to_text() == "1 + t*q");
  CHECK(g_poly(LineQuery{1, 1, 0, 1}).is_zero());
  CHECK(g_poly(LineQuery{0, 0, 3, 0}).to_text() == "1");
  CHECK(g_poly(LineQuery{0, 0, 0, 1}).is_zero());

  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      for (int ell = -6; ell <= 6; ++ell) {
        CHECK(g_poly(LineQuery{a, b, ell, 0}) == lemma_qbin2(a, b));
        QTPoly prev = g_poly(LineQuery{a, b, ell, 0});
        for (int r = 1; r <= a + b + 1; ++r) {
          const QTPoly cur = g_poly(LineQuery{a, b, ell, r});
          CHECK(coeffs_nonneg(cur));
          CHECK(coeffs_nonneg(prev - cur));  // counts shrink as r grows
          prev = cur;
        }
        CHECK(g_poly(LineQuery{a, b, ell, a + b + 1}).is_zero());
      }
    }
  }

  CHECK_THROWS_AS(g_poly(LineQuery{-1, 2, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(g_poly(LineQuery{2, -1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(g_poly(LineQuery{2, 2, 0, -1}), std::invalid_argument);
}

TEST_CASE("pair building block") {
  // A vanishing factor short-circuits before the prefactor guard.
  CHECK(f_poly(-1, Point{0, 0}, Point{3, 0}, Point{0, 0}, Point{5, 5}).is_zero());
  // Both factors alive with a negative prefactor exponent: Laurent output.
  CHECK_THROWS_AS(f_poly(-1, Point{0, 2}, Point{2, 0}, Point{4, 4}, Point{4, 4}),
                  std::domain_error);
  // Balanced case with one valley slot.
  const QTPoly f0 = f_poly(0, Point{0, 0}, Point{0, 0}, Point{1, 1}, Point{1, 1});
  CHECK(f0.coeff(0, 0) == 1);  // the empty pair
  CHECK(coeffs_nonneg(f0));
}

TEST_CASE("pair query normalization") {
  const PairQuery q = make_pair_query(Point{2, 0}, Point{0, 2}, Point{8, 8}, Point{10, 7}, 1);
  CHECK(q.a1 == Point{0, 2});
  CHECK(q.a2 == Point{2, 0});
  CHECK(q.b1 == Point{8, 8});
  CHECK(q.b2 == Point{10, 7});
  CHECK(q.assignment == Assignment::P_to_B2);
  CHECK(q.r == 1);

  const PairQuery same = make_pair_query(Point{1, 1}, Point{1, 1}, Point{3, 3}, Point{3, 3}, 0);
  CHECK(same.assignment == Assignment::P_to_B1);

  try {
    make_pair_query(Point{0, 0}, Point{1, 1}, Point{5, 5}, Point{6, 4}, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_configuration);  // starts incomparable
  }
  CHECK_THROWS_AS(make_pair_query(Point{0, 1}, Point{1, 0}, Point{2, 3}, Point{2, 4}, 0),
                  Error);  // targets incomparable
}

TEST_CASE("pair polynomial dispatch") {
  // Distinct starts and targets, first path to the lower target.
  const QTPoly h = h_poly(make_pair_query(Point{0, 1}, Point{1, 0}, Point{4, 3}, Point{3, 4}, 0));
  CHECK(h.value_at_one() == 15 * 15);  // all pairs across the two rectangles
  CHECK(coeffs_nonneg(h));

  // Shared start and target.
  const QTPoly hs = h_poly(make_pair_query(Point{0, 0}, Point{0, 0}, Point{3, 3}, Point{3, 3}, 0));
  CHECK(hs.value_at_one() == 20 * 20);

  // The antidiagonal balance of the starts is required.
  try {
    h_poly(make_pair_query(Point{0, 2}, Point{1, 0}, Point{4, 5}, Point{5, 4}, 0));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::condition_13_violated);
  }

  // First path to the upper target with distinct targets needs r >= 1.
  try {
    h_poly(make_pair_query(Point{0, 1}, Point{1, 0}, Point{2, 3}, Point{3, 2}, 0));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_configuration);
  }
  CHECK_NOTHROW(h_poly(make_pair_query(Point{0, 1}, Point{1, 0}, Point{2, 3}, Point{3, 2}, 1)));

  CHECK_THROWS_AS(h_poly(make_pair_query(Point{0, 0}, Point{0, 0}, Point{2, 2}, Point{2, 2}, -1)),
                  std::invalid_argument);
}
