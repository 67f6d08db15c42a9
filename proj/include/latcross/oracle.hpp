#pragma once

#include <map>
#include <string>
#include <vector>

#include "latcross/formulas.hpp"
#include "latcross/qtpoly.hpp"

namespace latcross {

// Brute-force references computed by direct step-word recursion over every
// path (or path pair), tallying descents, major index, and crossings with
// no closed-form shortcuts. Results map each crossing bound r to the
// polynomial over objects with at least r crossings.

// All UD paths with a up and b down steps against the line y = ell.
std::map<int, QTPoly> oracle_g(int a, int b, int ell, int threads = 1);

// All N/E path pairs p: a1 -> bp, q: a2 -> bq.
std::map<int, QTPoly> oracle_h(Point a1, Point a2, Point bp, Point bq,
                               int threads = 1);

struct SweepReport {
  std::string query;
  QTPoly formula;
  QTPoly oracle;
  bool equal = false;
  long long objects = 0;  // paths or pairs enumerated

  std::string to_json_line() const;
};

// Compares g_poly against oracle_g over 0 <= a <= max_a, 0 <= b <= max_b,
// -(b + ell_margin) <= ell <= a + ell_margin, 0 <= r <= min(r_cap, a + b).
std::vector<SweepReport> sweep_verify_line(int max_a, int max_b, int ell_margin,
                                           int r_cap, int threads = 1);

// Compares h_poly against oracle_h over all endpoint configurations with
// coordinates in [0, window]^2 that satisfy the antidiagonal balance and
// match a dispatch case, for 0 <= r <= r_cap.
std::vector<SweepReport> sweep_verify_pairs(int window, int r_cap,
                                            int threads = 1);

// Thread count from the LATCROSS_THREADS environment variable, falling back
// to the hardware concurrency.
int default_threads();

}  // namespace latcross
