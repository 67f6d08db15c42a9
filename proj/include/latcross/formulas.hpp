#pragma once

#include "latcross/paths.hpp"
#include "latcross/qtpoly.hpp"

namespace latcross {

// Which interval family a one-row sum ranges over: top rows in (x,u] or
// (x,v), bottom rows in [y,v) or [y,u].
enum class IntervalKind { XU, YV, XV, YU };

// Generating polynomial of all UD paths with a up and b down steps (or of
// all N/E paths across an a x b rectangle) by descents and major index:
// sum over n of t^n q^{n^2} [a choose n] [b choose n].
QTPoly lemma_qbin2(int a, int b);

// Closed form for the sum of q^(entry sum - shift) over one strictly
// increasing row of length j in the given interval; the shift normalizes
// the minimal entry sum to exponent zero in the balanced cases. Throws
// std::domain_error when the closed form has a negative q-exponent.
QTPoly lemma_sum_closed(IntervalKind kind, int x, int y, int u, int v, int j);

// Closed form for sum of q^(sum c + sum d - n(x+y)) over two-rowed arrays
// with rows of length n+k and n-k between the given bounds, one polynomial
// per bracket shape. Throws std::domain_error outside the polynomial range.
QTPoly lemma_sum_array(int x, int y, int u, int v, int n, int k, bool xv_yu);

struct LineQuery {
  int a = 0;    // up steps
  int b = 0;    // down steps
  int ell = 0;  // height of the crossed line
  int r = 0;    // minimal number of crossings
};

// Descents/major-index polynomial of UD paths with at least r crossings of
// the line y = ell, by the nine-region closed form.
QTPoly g_poly(const LineQuery& query);

// Building block for the pair formulas: q^(k(k + x2 - x1)) times the product
// of the two one-path sums with imbalance +-k toward the exchanged targets.
QTPoly f_poly(int k, Point a1, Point a2, Point b_first, Point b_second);

enum class Assignment { P_to_B1, P_to_B2 };

struct PairQuery {
  Point a1, a2;  // starts, a1 northwest of or equal to a2
  Point b1, b2;  // targets, b1 northwest of or equal to b2
  Assignment assignment = Assignment::P_to_B2;
  int r = 0;
};

// Normalizes raw endpoints into a PairQuery: starts ordered northwest-first,
// targets likewise, the assignment tracking which target the first path
// heads to. Incomparable endpoint pairs are rejected.
PairQuery make_pair_query(Point a1, Point a2, Point bp, Point bq, int r);

// Descents/major-index polynomial of path pairs with at least r crossings.
// Requires the antidiagonal balance x1 + y1 = x2 + y2; dispatches on which
// endpoints coincide and on the assignment.
QTPoly h_poly(const PairQuery& query);

}  // namespace latcross
