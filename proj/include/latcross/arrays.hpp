#pragma once

#include <vector>

#include "latcross/paths.hpp"

namespace latcross {

// Bracket shape of a two-rowed array: which bound closes which row.
//   XU_YV:  x < c_1 < ... < c_p <= u   and   y <= d_1 < ... < d_s < v
//   XV_YU:  x < c_1 < ... < c_p <  v   and   y <= d_1 < ... < d_s <= u
enum class Bracket { XU_YV, XV_YU };

// Two strictly increasing integer rows between the bounds (x, y, u, v),
// with the row/bound relations fixed by the bracket shape. Row lengths are
// free; the usual (n, k) shape parameters are derived where needed.
class TwoRowedArray {
 public:
  TwoRowedArray(int x, int y, int u, int v, Bracket bracket,
                std::vector<int> c, std::vector<int> d);

  int x() const { return x_; }
  int y() const { return y_; }
  int u() const { return u_; }
  int v() const { return v_; }
  Bracket bracket() const { return bracket_; }
  const std::vector<int>& c() const { return c_; }
  const std::vector<int>& d() const { return d_; }
  int len_c() const { return static_cast<int>(c_.size()); }
  int len_d() const { return static_cast<int>(d_.size()); }
  int min_len() const { return std::min(len_c(), len_d()); }

  // Upper bound closing each row under the current bracket.
  int c_upper() const { return bracket_ == Bracket::XU_YV ? u_ : v_; }
  int d_upper() const { return bracket_ == Bracket::XU_YV ? v_ : u_; }

  // Sentinel-extended entries: index 0 is the lower bound (x resp. y),
  // indices past the row hold the row's closing bound.
  int c_at(int i) const;
  int d_at(int i) const;

  long long entry_sum() const;

  // True when the bottom row starts at its closed lower bound (d_1 = y);
  // the doubly-closed bottom bracket used by the balanced boundary case.
  bool bottom_touches_y() const { return !d_.empty() && d_.front() == y_; }

  friend bool operator==(const TwoRowedArray&, const TwoRowedArray&) = default;

  // Two-row interlaced rendering with the bracket's relation symbols.
  std::string to_display() const;

 private:
  int x_, y_, u_, v_;
  Bracket bracket_;
  std::vector<int> c_, d_;
};

// A crossing read off the rows: upward crossings sit at top-row positions
// (c_i with d_i < c_i < d_{i+1}), downward ones at bottom-row positions
// (d_i with c_{i-1} < d_i < c_i), rows sentinel-extended, with the row index
// capped by min_len (+1 for the bottom row). Entry order along the array is
// y, x, d_1, c_1, d_2, c_2, ...
struct ArrayCrossing {
  CrossKind kind;
  bool on_top;  // true: at c_i, false: at d_i
  int i;        // row index of the entry (sentinel-extended)
  int value;    // the entry's value
  int index;    // 1-based ordinal along the array

  Crossing to_crossing() const { return {kind, {value, value}, index}; }
  friend bool operator==(const ArrayCrossing&, const ArrayCrossing&) = default;
};

std::vector<ArrayCrossing> array_crossings(const TwoRowedArray& a);

// Valley encoding of an N/E path: top row the x-coordinates of valleys,
// bottom row their y-coordinates, bounds (start, end), bracket XU_YV.
TwoRowedArray encode_path(const LatticePath& p);

// Inverse of encode_path; requires bracket XU_YV and equal row lengths,
// otherwise Error(shape_mismatch).
LatticePath decode_array(const TwoRowedArray& a);

// The path carried by the first min_len valleys, from (x, y) to the
// sentinel-extended endpoint (c_{min_len+1}, d_{min_len+1}). Its main
// diagonal crossings reproduce array_crossings exactly.
LatticePath truncate_array(const TwoRowedArray& a);

// Top-row swap at the r-th crossing (must be upward and proper, i.e. its
// entry value avoids both upper bounds): exchanges the row tails after the
// crossing entry and toggles the bracket. An involution that preserves the
// entry multiset and the first r crossings.
TwoRowedArray alpha(int r, const TwoRowedArray& a);

// Bottom-row swap at the r-th crossing (must be downward and proper);
// otherwise as alpha.
TwoRowedArray beta(int r, const TwoRowedArray& a);

// Bound-reflecting involution: negates and reverses the rows, sending the
// bounds (x, y, u, v) to (-v, -u, -y, -x). On XU_YV arrays it exchanges the
// two rows; on XV_YU arrays the row exchange is composed with a row swap so
// the result stays representable. Balanced arrays keep their crossing count
// with all kinds flipped.
TwoRowedArray nu(const TwoRowedArray& a);

// All arrays with the given bounds, bracket, and row lengths.
void for_each_array(int x, int y, int u, int v, Bracket bracket, int len_c,
                    int len_d, const std::function<void(const TwoRowedArray&)>& fn);

}  // namespace latcross
