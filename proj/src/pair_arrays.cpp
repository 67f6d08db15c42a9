#include "latcross/pair_arrays.hpp"

#include <algorithm>
#include <stdexcept>

namespace latcross {

ArrayPair::ArrayPair(TwoRowedArray first, TwoRowedArray second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_.bracket() != Bracket::XU_YV || second_.bracket() != Bracket::XU_YV)
    throw std::invalid_argument("pair arrays must use the XU_YV bracket");
  if (first_.len_d() - first_.len_c() != second_.len_c() - second_.len_d())
    throw std::invalid_argument("pair imbalance mismatch");
}

std::string ArrayPair::to_display() const {
  return "first (k=" + std::to_string(k()) + ", n=" + std::to_string(n()) +
         ")\n" + first_.to_display() + "\nsecond\n" + second_.to_display();
}

bool alt_less(const std::vector<int>& a, const std::vector<int>& b) {
  size_t ia = 0, ib = 0;
  bool swapped = false;  // parity of the tail swaps so far
  while (ia < a.size() && ib < b.size()) {
    const int ha = swapped ? b[ib] : a[ia];
    const int hb = swapped ? a[ia] : b[ib];
    if (ha != hb) return ha < hb;
    ++ia, ++ib;
    swapped = !swapped;
  }
  return false;
}

ArrayPair encode_pair(const LatticePath& p, const LatticePath& q) {
  return ArrayPair(encode_path(p), encode_path(q));
}

namespace {

// Zig-zag history of a row entry: the entry followed by the interleaved
// earlier entries of both rows down to the lower bounds, sentinel-extended.
std::vector<int> top_history(const TwoRowedArray& a, int i) {
  std::vector<int> h;
  h.push_back(a.c_at(i));
  for (int s = i; s >= 0; --s) {
    h.push_back(a.d_at(s));
    if (s > 0) h.push_back(a.c_at(s - 1));
  }
  return h;
}

std::vector<int> bottom_history(const TwoRowedArray& a, int i) {
  std::vector<int> h;
  h.push_back(a.d_at(i));
  for (int s = i - 1; s >= 0; --s) {
    h.push_back(a.c_at(s));
    h.push_back(a.d_at(s));
  }
  return h;
}

}  // namespace

std::vector<PairCrossing> pair_array_crossings(const ArrayPair& ap) {
  const TwoRowedArray& A = ap.first();
  const TwoRowedArray& B = ap.second();
  const int m1 = A.min_len();
  const int m2 = B.min_len();
  std::vector<PairCrossing> out;

  for (int i = 0; i <= m1; ++i)
    for (int j = 1; j <= m2 + 1; ++j) {
      // Upward at (c_i, f_j): the first path's east run through c_i pierces
      // the second's north run through f_j.
      const int ci = A.c_at(i), fj = B.d_at(j);
      if (!(B.c_at(j - 1) <= ci && ci < B.c_at(j))) continue;
      if (!(A.d_at(i) <= fj && fj < A.d_at(i + 1))) continue;
      if (!alt_less(top_history(B, j - 1), top_history(A, i))) continue;
      if (!alt_less(bottom_history(A, i), bottom_history(B, j))) continue;
      out.push_back({CrossKind::upward, {ci, fj}, i, j, 0});
    }

  for (int i = 1; i <= m1 + 1; ++i)
    for (int j = 0; j <= m2; ++j) {
      // Downward at (e_j, d_i).
      const int ej = B.c_at(j), di = A.d_at(i);
      if (!(A.c_at(i - 1) <= ej && ej < A.c_at(i))) continue;
      if (!(B.d_at(j) <= di && di < B.d_at(j + 1))) continue;
      if (!alt_less(top_history(A, i - 1), top_history(B, j))) continue;
      if (!alt_less(bottom_history(B, j), bottom_history(A, i))) continue;
      out.push_back({CrossKind::downward, {ej, di}, i, j, 0});
    }

  std::sort(out.begin(), out.end(), [](const PairCrossing& a, const PairCrossing& b) {
    return std::pair{a.vertex.x, a.vertex.y} < std::pair{b.vertex.x, b.vertex.y};
  });
  for (size_t r = 0; r < out.size(); ++r) out[r].index = static_cast<int>(r) + 1;
  return out;
}

std::vector<Crossing> pair_crossings(const ArrayPair& ap) {
  const Point a1{ap.first().x(), ap.first().y()};
  const Point a2{ap.second().x(), ap.second().y()};
  if (northwest(a1, a2) || a1 == a2) {
    std::vector<Crossing> out;
    for (const auto& pc : pair_array_crossings(ap)) out.push_back(pc.to_crossing());
    return out;
  }
  return pair_crossings(truncate_array(ap.first()), truncate_array(ap.second()));
}

namespace {

PairCrossing locate_pair(int r, const ArrayPair& ap, CrossKind want) {
  if (r < 1) throw std::invalid_argument("crossing ordinal must be >= 1");
  auto crs = pair_array_crossings(ap);
  if (static_cast<int>(crs.size()) < r)
    throw Error(Errc::no_such_crossing,
                "pair has " + std::to_string(crs.size()) + " crossings, needs " +
                    std::to_string(r));
  const PairCrossing& cr = crs[r - 1];
  if (cr.kind != want)
    throw Error(Errc::wrong_kind, std::string("crossing ") + std::to_string(r) +
                                      " is " +
                                      (cr.kind == CrossKind::upward ? "upward" : "downward"));
  return cr;
}

std::vector<int> splice(const std::vector<int>& head, int head_len,
                        const std::vector<int>& tail, int tail_from) {
  std::vector<int> out(head.begin(), head.begin() + head_len);
  out.insert(out.end(), tail.begin() + tail_from, tail.end());
  return out;
}

// Tail swap common to gamma, delta, and gamma0: the first array keeps its
// top row through c_I and bottom row through d_I2, then continues with the
// second's tails, and vice versa; the upper bound pairs are exchanged.
ArrayPair cross_swap(const ArrayPair& ap, int ci_keep, int d_keep, int e_keep,
                     int f_keep) {
  const TwoRowedArray& A = ap.first();
  const TwoRowedArray& B = ap.second();
  TwoRowedArray first(A.x(), A.y(), B.u(), B.v(), Bracket::XU_YV,
                      splice(A.c(), ci_keep, B.c(), e_keep),
                      splice(A.d(), d_keep, B.d(), f_keep));
  TwoRowedArray second(B.x(), B.y(), A.u(), A.v(), Bracket::XU_YV,
                       splice(B.c(), e_keep, A.c(), ci_keep),
                       splice(B.d(), f_keep, A.d(), d_keep));
  return ArrayPair(std::move(first), std::move(second));
}

}  // namespace

ArrayPair gamma(int r, const ArrayPair& ap) {
  const PairCrossing cr = locate_pair(r, ap, CrossKind::upward);
  const int i = cr.i, j = cr.j;  // upward at (c_i, f_j)
  if (ap.first().c_at(i) == ap.first().u() || ap.second().d_at(j) == ap.second().v())
    throw Error(Errc::improper_crossing, "crossing entries touch the bounds");
  // first keeps c_1..c_i, d_1..d_i; second keeps e_1..e_{j-1}, f_1..f_j.
  return cross_swap(ap, i, i, j - 1, j);
}

ArrayPair delta(int r, const ArrayPair& ap) {
  const PairCrossing cr = locate_pair(r, ap, CrossKind::downward);
  const int i = cr.i, j = cr.j;  // downward at (e_j, d_i)
  if (ap.second().c_at(j) == ap.second().u() || ap.first().d_at(i) == ap.first().v())
    throw Error(Errc::improper_crossing, "crossing entries touch the bounds");
  // first keeps c_1..c_{i-1}, d_1..d_i; second keeps e_1..e_j, f_1..f_j.
  return cross_swap(ap, i - 1, i, j, j);
}

ArrayPair sigma(const ArrayPair& ap) { return ArrayPair(ap.second(), ap.first()); }

ArrayPair gamma0(const ArrayPair& ap) {
  const TwoRowedArray& A = ap.first();
  const TwoRowedArray& B = ap.second();
  if (A.x() != B.x() || A.y() != B.y() || A.u() != B.u() || A.v() != B.v())
    throw Error(Errc::not_in_domain, "gamma0 needs both arrays between the same bounds");
  const int depth = std::max({A.len_c(), A.len_d(), B.len_c(), B.len_d()}) + 1;
  for (int i = 1; i <= depth; ++i) {
    // Zig-zag order: bottom entry i, then top entry i.
    if (A.d_at(i) != B.d_at(i)) {
      if (A.d_at(i) < B.d_at(i))
        throw Error(Errc::not_in_domain, "pair is in the downward class");
      // d_i > f_i: swap as if upward at (c_{i-1}, f_i).
      if (A.c_at(i - 1) == A.u() || B.d_at(i) == B.v())
        throw Error(Errc::improper_position, "swap entries touch the bounds");
      return cross_swap(ap, i - 1, i - 1, i - 1, i);
    }
    if (A.c_at(i) != B.c_at(i)) {
      if (A.c_at(i) > B.c_at(i))
        throw Error(Errc::not_in_domain, "pair is in the downward class");
      // c_i < e_i: swap as if upward at (c_i, f_i).
      if (A.c_at(i) == A.u() || B.d_at(i) == B.v())
        throw Error(Errc::improper_position, "swap entries touch the bounds");
      return cross_swap(ap, i, i, i - 1, i);
    }
  }
  throw Error(Errc::not_in_domain, "arrays are equal");
}

void for_each_pair(int x1, int y1, int u1, int v1, int x2, int y2, int u2,
                   int v2, int n, int k,
                   const std::function<void(const ArrayPair&)>& fn) {
  for (int n1 = 0; n1 <= n; ++n1) {
    const int n2 = n - n1;
    if (n1 + k < 0 || n2 - k < 0) continue;
    for_each_array(x1, y1, u1, v1, Bracket::XU_YV, n1, n1 + k,
                   [&](const TwoRowedArray& A) {
                     for_each_array(x2, y2, u2, v2, Bracket::XU_YV, n2, n2 - k,
                                    [&](const TwoRowedArray& B) {
                                      fn(ArrayPair(A, B));
                                    });
                   });
  }
}

}  // namespace latcross
