#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latcross {

// Outcome of one verification suite: number of individual checks performed
// and descriptions of the first few failures, if any.
struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failed = 0;
  std::vector<std::string> failures;  // first few failure descriptions

  bool pass() const { return failed == 0; }
  void check(bool ok, const std::string& what);
  std::string summary() const;
};

// Closed-form line polynomials against brute-force enumeration over a
// rectangle of (a, b), a band of lines, and all meaningful r. Optionally
// writes one JSON line per query to jsonl.
SuiteResult verify_line(int max_a, int max_b, int ell_margin, int r_cap,
                        int threads, std::ostream* jsonl = nullptr);

// Closed-form pair polynomials against brute-force enumeration over all
// endpoint configurations in a coordinate window.
SuiteResult verify_pairs(int window, int r_cap, int threads,
                         std::ostream* jsonl = nullptr);

// Counting identities: the two-variable path sum, the one-row and two-row
// closed sums, the pair factorization, and the parity/kind laws for
// crossings of arrays and pairs.
SuiteResult verify_lemmas();

// Structural laws of the six maps (involution, entry preservation, prefix
// crossing preservation, shape transport) on exhaustive windows plus random
// instances until at least min_instances applications ran.
SuiteResult verify_bijections(long long min_instances, unsigned seed);

// Worked examples with pinned data: paths, encodings, crossing lists, and
// the documented map chains.
SuiteResult verify_figures();

// Agreement of the row-condition crossing detectors with the path-level
// detectors through truncation, for single arrays and pairs.
SuiteResult verify_detectors();

}  // namespace latcross
