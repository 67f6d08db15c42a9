#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "doctest.h"
#include "latcross/errors.hpp"
#include "latcross/qtpoly.hpp"

using namespace latcross;

namespace {

// Gaussian binomial by direct enumeration: 0/1 words with n ones out of m
// letters, weighted by q^(number of inversions). Independent of qbinom.
QTPoly qbinom_brute(int m, int n) {
  if (n < 0 || n > m) return QTPoly{};
  // Iterate over all subsets of positions for the ones.
  QTPoly total;
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i;
  while (true) {
    // Weight: number of (one, zero) pairs in left-to-right order.
    std::vector<int> word(static_cast<std::size_t>(m), 0);
    for (int p : pos) word[static_cast<std::size_t>(p)] = 1;
    int inv = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (word[static_cast<std::size_t>(i)] == 1 && word[static_cast<std::size_t>(j)] == 0)
          ++inv;
    total.add_term(1, 0, inv);
    // Next combination.
    int i = n - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == m - n + i) --i;
    if (i < 0) break;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j)
      pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
  }
  return total;
}

QTPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 6), expo(0, 5), coef(-9, 9);
  QTPoly p;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term(coef(rng), expo(rng), expo(rng));
  return p;
}

}  // namespace

TEST_CASE("term accumulation and queries") {
  QTPoly p;
  CHECK(p.is_zero());
  CHECK(p.coeff(0, 0) == 0);
  p.add_term(2, 1, 3);
  p.add_term(-2, 1, 3);
  CHECK(p.is_zero());  // cancelling terms leave no residue
  p.add_term(5, 0, 2);
  CHECK(p.coeff(0, 2) == 5);
  CHECK(p.terms().size() == 1);
  CHECK_THROWS_AS(p.add_term(1, -1, 0), std::invalid_argument);
  CHECK_THROWS_AS(p.add_term(1, 0, -2), std::invalid_argument);
}

TEST_CASE("text rendering") {
  CHECK(QTPoly{}.to_text() == "0");
  CHECK(QTPoly::constant(7).to_text() == "7");
  CHECK(QTPoly::monomial(1, 1, 1).to_text() == "t*q");
  CHECK(QTPoly::monomial(1, 1, 0).to_text() == "t");
  CHECK(QTPoly::monomial(1, 0, 2).to_text() == "q^2");
  CHECK(QTPoly::monomial(2, 2, 3).to_text() == "2*t^2*q^3");
  QTPoly p = QTPoly::constant(1);
  p += QTPoly::monomial(1, 1, 1);
  CHECK(p.to_text() == "1 + t*q");
  QTPoly neg = QTPoly::monomial(-3, 0, 1);
  neg += QTPoly::monomial(1, 2, 0);
  CHECK(neg.to_text() == "-3*q + t^2");
}

TEST_CASE("latex rendering") {
  QTPoly p = QTPoly::constant(1);
  p += QTPoly::monomial(1, 1, 2);
  p += QTPoly::monomial(2, 2, 3);
  CHECK(p.to_latex() == "1 + tq^{2} + 2t^{2}q^{3}");
  CHECK(QTPoly{}.to_latex() == "0");
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(20240811);
  const QTPoly zero;
  const QTPoly one = QTPoly::constant(1);
  for (int iter = 0; iter < 10000; ++iter) {
    const QTPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK(a * zero == zero);
    CHECK(a - a == zero);
  }
}

TEST_CASE("shift and evaluations") {
  QTPoly p = QTPoly::monomial(3, 1, 2);
  p += QTPoly::constant(4);
  const QTPoly s = p.shifted(2, 1);
  CHECK(s.coeff(3, 3) == 3);
  CHECK(s.coeff(2, 1) == 4);
  CHECK_THROWS_AS(QTPoly::monomial(1, 0, 0).shifted(-1, 0), std::invalid_argument);
  CHECK(p.value_at_one() == 7);
  const auto profile = p.t_profile_at_q1();
  CHECK(profile.at(0) == 4);
  CHECK(profile.at(1) == 3);
}

TEST_CASE("gaussian binomials match direct enumeration") {
  // Frozen golden first: [4 choose 2] enumerated over 0/1 words.
  const QTPoly golden = qbinom_brute(4, 2);
  CHECK(golden.coeff(0, 0) == 1);
  CHECK(golden.coeff(0, 1) == 1);
  CHECK(golden.coeff(0, 2) == 2);
  CHECK(golden.coeff(0, 3) == 1);
  CHECK(golden.coeff(0, 4) == 1);
  CHECK(qbinom(4, 2) == golden);
  for (int m = 0; m <= 9; ++m)
    for (int n = -2; n <= m + 2; ++n) CHECK(qbinom(m, n) == qbinom_brute(m, n));
}

TEST_CASE("gaussian binomial identities") {
  for (int m = 1; m <= 12; ++m) {
    for (int n = 0; n <= m; ++n) {
      CHECK(qbinom(m, n) == qbinom(m, m - n));  // symmetry
      if (n >= 1) {
        // Pascal recurrence with the q-weight on the second branch.
        QTPoly rhs = qbinom(m - 1, n - 1);
        rhs += qbinom(m - 1, n).shifted(0, n);
        CHECK(qbinom(m, n) == rhs);
      }
      // q = 1 specialization is the plain binomial coefficient.
      Int binom = 1;
      for (int i = 0; i < n; ++i) binom = binom * (m - i) / (i + 1);
      CHECK(qbinom(m, n).value_at_one() == binom);
    }
  }
}

TEST_CASE("division by 1 - q^a") {
  // ((1 - q^4)(1 + t)) / (1 - q^2) = (1 + q^2)(1 + t).
  QTPoly num = one_minus_q_pow(4);
  num *= QTPoly::constant(1) + QTPoly::monomial(1, 1, 0);
  QTPoly expected = QTPoly::constant(1) + QTPoly::monomial(1, 0, 2);
  expected *= QTPoly::constant(1) + QTPoly::monomial(1, 1, 0);
  CHECK(exact_div_one_minus_q_pow(num, 2) == expected);
  CHECK(exact_div_one_minus_q_pow(QTPoly{}, 3).is_zero());

  QTPoly bad = QTPoly::constant(1) + QTPoly::monomial(1, 0, 1);
  CHECK_THROWS_AS(exact_div_one_minus_q_pow(bad, 2), Error);
  try {
    exact_div_one_minus_q_pow(one_minus_q_pow(3), 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_divisible);
  }
}
