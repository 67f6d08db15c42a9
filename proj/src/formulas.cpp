#include "latcross/formulas.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "latcross/errors.hpp"

namespace latcross {

QTPoly lemma_qbin2(int a, int b) {
  QTPoly out;
  for (int n = 0; n <= std::min(a, b); ++n) {
    QTPoly f = qbinom(a, n) * qbinom(b, n);
    if (!f.is_zero()) out += f.shifted(n, n * n);
  }
  return out;
}

namespace {

long long tri(long long j) { return j * (j + 1) / 2; }

QTPoly guard_shift(const QTPoly& p, long long t_shift, long long q_shift,
                   const char* what) {
  if (p.is_zero()) return p;
  if (q_shift < 0)
    throw std::domain_error(std::string(what) +
                            ": closed form has negative q-exponent " +
                            std::to_string(q_shift));
  return p.shifted(static_cast<int>(t_shift), static_cast<int>(q_shift));
}

// Row-sum factor. A row of length zero is the empty sequence, which exists
// for any bounds, so j = 0 yields the empty product 1 even when the clipped
// q-binomial would vanish on a negative argument.
QTPoly sum_factor(int m, int j) {
  return j == 0 ? QTPoly::constant(1) : qbinom(m, j);
}

}  // namespace

QTPoly lemma_sum_closed(IntervalKind kind, int x, int y, int u, int v, int j) {
  if (j < 0) return QTPoly();
  switch (kind) {
    case IntervalKind::XU:
      return guard_shift(sum_factor(u - x, j), 0, tri(j) + 1LL * j * x, "row sum (x,u]");
    case IntervalKind::YV:
      return guard_shift(sum_factor(v - y, j), 0, tri(j) + 1LL * j * (y - 1), "row sum [y,v)");
    case IntervalKind::XV:
      return guard_shift(sum_factor(v - x - 1, j), 0, tri(j) + 1LL * j * x, "row sum (x,v)");
    case IntervalKind::YU:
      return guard_shift(sum_factor(u - y + 1, j), 0, tri(j) + 1LL * j * (y - 1), "row sum [y,u]");
  }
  return QTPoly();
}

QTPoly lemma_sum_array(int x, int y, int u, int v, int n, int k, bool xv_yu) {
  const QTPoly prod = xv_yu
                          ? sum_factor(v - x - 1, n + k) * sum_factor(u - y + 1, n - k)
                          : sum_factor(u - x, n + k) * sum_factor(v - y, n - k);
  const long long e = 1LL * n * n + 1LL * k * (k + x - y + 1);
  return guard_shift(prod, 0, e, "two-row sum");
}

namespace {

// Sum over n of t^n q^qexp(n) [A choose n+s1] [B choose n+s2].
QTPoly tq_sum(int A, int s1, int B, int s2,
              const std::function<long long(int)>& qexp) {
  QTPoly out;
  for (int n = 0;; ++n) {
    if (n + s1 > A && n + s2 > B) break;
    const QTPoly f1 = qbinom(A, n + s1);
    if (f1.is_zero()) continue;
    const QTPoly f2 = qbinom(B, n + s2);
    if (f2.is_zero()) continue;
    const long long e = qexp(n);
    if (e < 0) throw std::logic_error("negative exponent in a line formula");
    out += (f1 * f2).shifted(n, static_cast<int>(e));
  }
  return out;
}

}  // namespace

QTPoly g_poly(const LineQuery& query) {
  const int a = query.a, b = query.b, ell = query.ell, r = query.r;
  if (a < 0 || b < 0) throw std::invalid_argument("step counts must be nonnegative");
  if (r < 0) throw std::invalid_argument("crossing bound must be nonnegative");
  // Zero crossings is no restriction, in every region.
  if (r == 0) return lemma_qbin2(a, b);

  const int diff = a - b;
  const auto nn = [](int n) { return 1LL * n * n; };

  if (ell > 0 && ell < diff) {  // strictly between, line below the end
    const int m = r / 2;
    return tq_sum(a, -m, b, m,
                  [&](int n) { return nn(n) + 1LL * m * (m + ell + 1); });
  }
  if (ell < 0 && ell > diff) {
    const int m = r / 2;
    return tq_sum(a, m, b, -m,
                  [&](int n) { return nn(n) + 1LL * m * (m - ell - 1); });
  }
  if (ell < 0 && ell < diff) {
    const int m = (r - 1) / 2;
    return tq_sum(a - ell - 1, -m - 1, b + ell + 1, m + 1,
                  [&](int n) { return nn(n) + 1LL * (m + 1) * (m - ell); });
  }
  if (ell > 0 && ell > diff) {
    const int m = (r - 1) / 2;
    return tq_sum(a - ell - 1, m, b + ell + 1, -m,
                  [&](int n) { return nn(n) + 1LL * m * (m + ell + 1); });
  }
  if (ell == 0 && 0 < diff) {
    const int m = r / 2;
    if (r % 2 == 0)
      return tq_sum(a, -m, b, m, [&](int n) { return nn(n) + 1LL * m * (m + 1); });
    return tq_sum(a - 1, -m - 1, b + 1, m + 1,
                  [&](int n) { return nn(n) + 1LL * m * (m + 1); });
  }
  if (ell == 0 && 0 > diff) {
    const int m = r / 2;
    if (r % 2 == 0)
      return tq_sum(a, m, b, -m, [&](int n) { return nn(n) + 1LL * m * (m - 1); });
    return tq_sum(a - 1, m, b + 1, -m,
                  [&](int n) { return nn(n) + 1LL * m * (m + 1); });
  }
  if (ell > 0 && ell == diff) {
    const int m = r / 2;
    if (r % 2 == 0)
      return tq_sum(a, -m, b, m,
                    [&](int n) { return nn(n) + 1LL * m * (m + ell + 1); });
    return tq_sum(a + 1, -m, b - 1, m,
                  [&](int n) { return nn(n) + 1LL * m * (m + ell + 1); });
  }
  if (ell < 0 && ell == diff) {
    const int m = r / 2;
    if (r % 2 == 0)
      return tq_sum(a, m, b, -m,
                    [&](int n) { return nn(n) + 1LL * m * (m - ell - 1); });
    return tq_sum(a + 1, m + 1, b - 1, -m - 1,
                  [&](int n) { return nn(n) + 1LL * (m + 1) * (m - ell); });
  }

  // Balanced boundary: ell = 0 = a - b.
  if (a == 0) return QTPoly();  // the empty path has no crossings and r >= 1
  const int m = r / 2;
  QTPoly result;
  if (r % 2 == 0) {
    result = tq_sum(a, -m, a - 1, m,
                    [&](int n) { return nn(n) + n + 1LL * m * m; }) +
             tq_sum(a, m, a - 1, -m - 1,
                    [&](int n) { return nn(n) + 1LL * m * (m + 1); });
    // Independent route: the same coefficients arise from the balanced
    // two-binomial sum scaled by (1 - q^(a-2m)) / (1 - q^a).
    if (a - 2 * m >= 1) {
      const QTPoly S =
          tq_sum(a, m, a, -m, [&](int n) { return nn(n) + 1LL * m * (m + 1); });
      if (exact_div_one_minus_q_pow(S * one_minus_q_pow(a - 2 * m), a) != result)
        throw std::logic_error("balanced even evaluation routes disagree");
    }
  } else {
    result = tq_sum(a - 1, -m - 1, a, m + 1,
                    [&](int n) { return nn(n) + n + 1LL * (m + 1) * (m + 1); }) +
             tq_sum(a - 1, m, a, -m - 1,
                    [&](int n) { return nn(n) + 1LL * m * (m + 1); });
    const QTPoly S = tq_sum(a, m + 1, a, -m - 1,
                            [&](int n) { return nn(n) + 1LL * m * (m + 1); });
    if (exact_div_one_minus_q_pow(S * one_minus_q_pow(a + 2 * (m + 1)), a) != result)
      throw std::logic_error("balanced odd evaluation routes disagree");
  }
  return result;
}

QTPoly f_poly(int k, Point a1, Point a2, Point b_first, Point b_second) {
  const QTPoly F1 = tq_sum(b_first.x - a1.x, 0, b_first.y - a1.y, k,
                           [&](int n) { return 1LL * n * (n + k); });
  if (F1.is_zero()) return QTPoly();
  const QTPoly F2 = tq_sum(b_second.x - a2.x, 0, b_second.y - a2.y, -k,
                           [&](int n) { return 1LL * n * (n - k); });
  if (F2.is_zero()) return QTPoly();
  const long long e0 = 1LL * k * (k + a2.x - a1.x);
  if (e0 < 0)
    throw std::domain_error("pair building block has negative q-exponent " +
                            std::to_string(e0));
  return (F1 * F2).shifted(0, static_cast<int>(e0));
}

namespace {

Assignment flipped(Assignment a) {
  return a == Assignment::P_to_B1 ? Assignment::P_to_B2 : Assignment::P_to_B1;
}

}  // namespace

PairQuery make_pair_query(Point a1, Point a2, Point bp, Point bq, int r) {
  if (northwest(a2, a1)) {
    std::swap(a1, a2);
    std::swap(bp, bq);
  } else if (!(a1 == a2 || northwest(a1, a2))) {
    throw Error(Errc::unsupported_configuration,
                "start points are not northwest-comparable");
  }
  PairQuery q;
  q.a1 = a1;
  q.a2 = a2;
  q.r = r;
  if (bp == bq || northwest(bp, bq)) {
    q.b1 = bp;
    q.b2 = bq;
    q.assignment = Assignment::P_to_B1;
  } else if (northwest(bq, bp)) {
    q.b1 = bq;
    q.b2 = bp;
    q.assignment = Assignment::P_to_B2;
  } else {
    throw Error(Errc::unsupported_configuration,
                "target points are not northwest-comparable");
  }
  return q;
}

QTPoly h_poly(const PairQuery& query) {
  PairQuery q = query;
  if (q.r < 0) throw std::invalid_argument("crossing bound must be nonnegative");
  if (q.a1.x + q.a1.y != q.a2.x + q.a2.y)
    throw Error(Errc::condition_13_violated,
                "starts must lie on one antidiagonal");
  if (northwest(q.a2, q.a1)) {
    std::swap(q.a1, q.a2);
    std::swap(q.b1, q.b2);
    q.assignment = flipped(q.assignment);
  } else if (!(q.a1 == q.a2 || northwest(q.a1, q.a2))) {
    throw Error(Errc::unsupported_configuration,
                "start points are not northwest-comparable");
  }
  if (northwest(q.b2, q.b1)) {
    std::swap(q.b1, q.b2);
    q.assignment = flipped(q.assignment);
  } else if (!(q.b1 == q.b2 || northwest(q.b1, q.b2))) {
    throw Error(Errc::unsupported_configuration,
                "target points are not northwest-comparable");
  }

  const bool a_eq = q.a1 == q.a2;
  const bool b_eq = q.b1 == q.b2;
  if (a_eq && b_eq) {
    if (q.r == 0) return f_poly(0, q.a1, q.a2, q.b2, q.b1);
    // Alternating tail of the building blocks, doubled; terms vanish once
    // the imbalance outgrows the vertical extent.
    QTPoly out;
    const int cap = q.b1.y - q.a1.y;
    int sign = 1;
    for (int j = 1; q.r + j <= cap; ++j, sign = -sign)
      out += QTPoly::constant(2 * sign) * f_poly(q.r + j, q.a1, q.a2, q.b2, q.b1);
    return out;
  }
  // One shared endpoint: the building block applies at every r directly.
  if (a_eq || b_eq) return f_poly(q.r, q.a1, q.a2, q.b2, q.b1);
  if (q.assignment == Assignment::P_to_B2)
    return f_poly(2 * (q.r / 2), q.a1, q.a2, q.b2, q.b1);
  if (q.r == 0)
    throw Error(Errc::unsupported_configuration,
                "no closed form covers the parallel assignment without crossings");
  return f_poly(q.r % 2 == 1 ? q.r : q.r - 1, q.a1, q.a2, q.b2, q.b1);
}

}  // namespace latcross
