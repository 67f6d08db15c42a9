#pragma once

#include "latcross/arrays.hpp"

namespace latcross {

// A pair of XU_YV two-rowed arrays with opposite row-length imbalance:
// the first array has len(d) - len(c) = k, the second len(c) - len(d) = k.
// Rows are conventionally named c,d (first) and e,f (second).
class ArrayPair {
 public:
  ArrayPair(TwoRowedArray first, TwoRowedArray second);

  const TwoRowedArray& first() const { return first_; }
  const TwoRowedArray& second() const { return second_; }
  int k() const { return first_.len_d() - first_.len_c(); }
  int n() const { return first_.len_c() + second_.len_c(); }
  long long entry_sum() const { return first_.entry_sum() + second_.entry_sum(); }

  friend bool operator==(const ArrayPair&, const ArrayPair&) = default;

  std::string to_display() const;

 private:
  TwoRowedArray first_, second_;
};

// Alternating lexicographic comparison of two integer sequences: compare
// heads; on a tie recurse with the tails swapped. Exhausting either
// sequence yields false.
bool alt_less(const std::vector<int>& a, const std::vector<int>& b);

// Valley encoding of both paths; the imbalance k is 0.
ArrayPair encode_pair(const LatticePath& p, const LatticePath& q);

// A pair crossing located in row coordinates: upward at (c_i, f_j),
// downward at (e_j, d_i).
struct PairCrossing {
  CrossKind kind;
  Point vertex;  // (c_i, f_j) or (e_j, d_i)
  int i;         // row index into the first array
  int j;         // row index into the second array
  int index;     // 1-based ordinal by vertex position (x, then y)
  Crossing to_crossing() const { return {kind, vertex, index}; }
  friend bool operator==(const PairCrossing&, const PairCrossing&) = default;
};

// Crossings read off the rows by the interleaving conditions (value
// comparisons plus alternating history comparisons), ordered by vertex.
// Faithful to the paths' pair crossings when the first start lies strictly
// northwest of the second (or the starts coincide).
std::vector<PairCrossing> pair_array_crossings(const ArrayPair& ap);

// Crossings of the pair, as crossings of the carried truncated paths. Uses
// the row conditions when the first start is northwest of (or equal to) the
// second, and falls back to the path-level detector otherwise.
std::vector<Crossing> pair_crossings(const ArrayPair& ap);

// Tail swap across the pair at the r-th crossing (must be upward at some
// (c_i, f_j) and proper: c_i avoids the first upper x-bound, f_j the second
// upper y-bound). Exchanges row tails between the arrays, swaps the upper
// bound pairs, and sends k to -k-1. Involution preserving the entry sum and
// the first r crossings.
ArrayPair gamma(int r, const ArrayPair& ap);

// Companion swap at the r-th crossing (must be downward at some (e_j, d_i)
// and proper); sends -k to k+1. Equal to sigma . gamma . sigma.
ArrayPair delta(int r, const ArrayPair& ap);

// Exchanges the two arrays; k changes sign and crossing kinds flip.
ArrayPair sigma(const ArrayPair& ap);

// Boundary swap for pairs whose arrays share all four bounds: locates the
// leftmost zig-zag difference between the arrays (d_1 : f_1, c_1 : e_1,
// d_2 : f_2, ... with sentinel-extended rows) and performs the gamma-style
// tail swap there. Defined on pairs whose difference points up (c_i < e_i
// or d_i > f_i); throws Error(not_in_domain) for equal arrays or
// downward-class pairs, Error(improper_position) when the designated
// entries touch the bounds.
ArrayPair gamma0(const ArrayPair& ap);

// All pairs with the given bounds and row lengths for the first array;
// the second array's row lengths run over all splits consistent with n, k.
void for_each_pair(int x1, int y1, int u1, int v1, int x2, int y2, int u2,
                   int v2, int n, int k,
                   const std::function<void(const ArrayPair&)>& fn);

}  // namespace latcross
