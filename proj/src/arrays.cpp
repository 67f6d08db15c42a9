#include "latcross/arrays.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace latcross {

namespace {

void check_strict_increase(const std::vector<int>& row, const char* name) {
  for (size_t i = 1; i < row.size(); ++i)
    if (row[i - 1] >= row[i])
      throw std::invalid_argument(std::string(name) + " row not strictly increasing");
}

}  // namespace

TwoRowedArray::TwoRowedArray(int x, int y, int u, int v, Bracket bracket,
                             std::vector<int> c, std::vector<int> d)
    : x_(x), y_(y), u_(u), v_(v), bracket_(bracket), c_(std::move(c)), d_(std::move(d)) {
  check_strict_increase(c_, "top");
  check_strict_increase(d_, "bottom");
  if (!c_.empty()) {
    if (c_.front() <= x_) throw std::invalid_argument("top row must start above x");
    const bool closed = bracket_ == Bracket::XU_YV;
    if (closed ? c_.back() > u_ : c_.back() >= v_)
      throw std::invalid_argument("top row exceeds its upper bound");
  }
  if (!d_.empty()) {
    if (d_.front() < y_) throw std::invalid_argument("bottom row must start at or above y");
    const bool closed = bracket_ == Bracket::XV_YU;
    if (closed ? d_.back() > u_ : d_.back() >= v_)
      throw std::invalid_argument("bottom row exceeds its upper bound");
  }
}

int TwoRowedArray::c_at(int i) const {
  if (i <= 0) return x_;
  if (i > len_c()) return c_upper();
  return c_[i - 1];
}

int TwoRowedArray::d_at(int i) const {
  if (i <= 0) return y_;
  if (i > len_d()) return d_upper();
  return d_[i - 1];
}

long long TwoRowedArray::entry_sum() const {
  long long s = 0;
  for (int e : c_) s += e;
  for (int e : d_) s += e;
  return s;
}

std::string TwoRowedArray::to_display() const {
  const bool top_closed = bracket_ == Bracket::XU_YV;
  std::ostringstream top, bot;
  top << "top:    " << x_;
  for (int e : c_) top << " < " << e;
  top << (top_closed ? " <= " : " < ") << (top_closed ? u_ : v_);
  bot << "bottom: " << y_;
  for (size_t i = 0; i < d_.size(); ++i) bot << (i == 0 ? " <= " : " < ") << d_[i];
  bot << (top_closed ? " < " : " <= ") << (top_closed ? v_ : u_);
  return top.str() + "\n" + bot.str();
}

std::vector<ArrayCrossing> array_crossings(const TwoRowedArray& a) {
  std::vector<ArrayCrossing> out;
  const int m = a.min_len();
  // Walk entries in array order y, x, d_1, c_1, d_2, c_2, ... so crossings
  // come out ordered by position.
  for (int i = 0; i <= m + 1; ++i) {
    if (i >= 1 && i <= m + 1 && a.c_at(i - 1) < a.d_at(i) && a.d_at(i) < a.c_at(i))
      out.push_back({CrossKind::downward, false, i, a.d_at(i),
                     static_cast<int>(out.size()) + 1});
    if (i <= m && a.d_at(i) < a.c_at(i) && a.c_at(i) < a.d_at(i + 1))
      out.push_back({CrossKind::upward, true, i, a.c_at(i),
                     static_cast<int>(out.size()) + 1});
  }
  // Degenerate tail: when c_m == d_m == d_{m+1} the two final east runs of
  // the truncated path merge and pass straight through (c_m, c_m), a downward
  // crossing that the strict inequalities above cannot see. It is last in
  // array order, and its entry sits on a bound, so it is never proper.
  if (m >= 1 && a.c_at(m) == a.d_at(m) && a.d_at(m + 1) == a.d_at(m) &&
      a.c_at(m + 1) > a.c_at(m))
    out.push_back({CrossKind::downward, false, m + 1, a.d_at(m + 1),
                   static_cast<int>(out.size()) + 1});
  return out;
}

TwoRowedArray encode_path(const LatticePath& p) {
  const Point a = p.start(), b = p.end();
  std::vector<int> c, d;
  const auto& s = p.steps();
  Point v = a;
  for (int i = 1; i < static_cast<int>(s.size()); ++i) {
    (s[i - 1] == Step::N ? v.y : v.x) += 1;
    if (s[i - 1] == Step::E && s[i] == Step::N) {
      c.push_back(v.x);
      d.push_back(v.y);
    }
  }
  return TwoRowedArray(a.x, a.y, b.x, b.y, Bracket::XU_YV, std::move(c), std::move(d));
}

namespace {

LatticePath walk_valleys(const TwoRowedArray& a, int p) {
  // Word N^{d_1-y} E^{c_1-x} N^{d_2-d_1} E^{c_2-c_1} ... ending at the
  // sentinel-extended pair (c_{p+1}, d_{p+1}).
  std::vector<Step> w;
  int px = a.x(), py = a.y();
  for (int i = 1; i <= p + 1; ++i) {
    for (int k = py; k < a.d_at(i); ++k) w.push_back(Step::N);
    for (int k = px; k < a.c_at(i); ++k) w.push_back(Step::E);
    px = a.c_at(i);
    py = a.d_at(i);
  }
  return LatticePath({a.x(), a.y()}, std::move(w));
}

}  // namespace

LatticePath decode_array(const TwoRowedArray& a) {
  if (a.bracket() != Bracket::XU_YV)
    throw Error(Errc::shape_mismatch, "decode needs the XU_YV bracket");
  if (a.len_c() != a.len_d())
    throw Error(Errc::shape_mismatch, "decode needs equal row lengths");
  return walk_valleys(a, a.len_c());
}

LatticePath truncate_array(const TwoRowedArray& a) {
  return walk_valleys(a, a.min_len());
}

namespace {

ArrayCrossing locate(int r, const TwoRowedArray& a, CrossKind want) {
  if (r < 1) throw std::invalid_argument("crossing ordinal must be >= 1");
  auto crs = array_crossings(a);
  if (static_cast<int>(crs.size()) < r)
    throw Error(Errc::no_such_crossing,
                "array has " + std::to_string(crs.size()) + " crossings, needs " +
                    std::to_string(r));
  const ArrayCrossing& cr = crs[r - 1];
  if (cr.kind != want)
    throw Error(Errc::wrong_kind, std::string("crossing ") + std::to_string(r) +
                                      " is " +
                                      (cr.kind == CrossKind::upward ? "upward" : "downward"));
  if (cr.value == a.u() || cr.value == a.v())
    throw Error(Errc::improper_crossing,
                "crossing entry " + std::to_string(cr.value) + " lies on a bound");
  // An upward crossing can sit at the lower bound x of an empty top row whose
  // closing bound is at or below x; the tail swap would then lose the
  // crossing, so the splice treats it like a bound collision.
  if (want == CrossKind::upward && a.c_at(cr.i) >= a.c_at(cr.i + 1))
    throw Error(Errc::improper_crossing,
                "top row closes at or below the crossing entry");
  return cr;
}

std::vector<int> splice(const std::vector<int>& head, int head_len,
                        const std::vector<int>& tail, int tail_from) {
  std::vector<int> out(head.begin(), head.begin() + head_len);
  out.insert(out.end(), tail.begin() + tail_from, tail.end());
  return out;
}

Bracket toggled(Bracket b) {
  return b == Bracket::XU_YV ? Bracket::XV_YU : Bracket::XU_YV;
}

}  // namespace

TwoRowedArray alpha(int r, const TwoRowedArray& a) {
  const ArrayCrossing cr = locate(r, a, CrossKind::upward);
  const int i = cr.i;  // crossing at c_i, 0 <= i <= min_len
  return TwoRowedArray(a.x(), a.y(), a.u(), a.v(), toggled(a.bracket()),
                       splice(a.c(), i, a.d(), i), splice(a.d(), i, a.c(), i));
}

TwoRowedArray beta(int r, const TwoRowedArray& a) {
  const ArrayCrossing cr = locate(r, a, CrossKind::downward);
  const int i = cr.i;  // crossing at d_i, 1 <= i <= min_len + 1
  return TwoRowedArray(a.x(), a.y(), a.u(), a.v(), toggled(a.bracket()),
                       splice(a.c(), i - 1, a.d(), i), splice(a.d(), i, a.c(), i - 1));
}

TwoRowedArray nu(const TwoRowedArray& a) {
  auto neg_rev = [](const std::vector<int>& row) {
    std::vector<int> out(row.rbegin(), row.rend());
    for (int& e : out) e = -e;
    return out;
  };
  if (a.bracket() == Bracket::XU_YV)
    return TwoRowedArray(-a.v(), -a.u(), -a.y(), -a.x(), Bracket::XU_YV,
                         neg_rev(a.d()), neg_rev(a.c()));
  return TwoRowedArray(-a.v(), -a.u(), -a.y(), -a.x(), Bracket::XV_YU,
                       neg_rev(a.c()), neg_rev(a.d()));
}

void for_each_array(int x, int y, int u, int v, Bracket bracket, int len_c,
                    int len_d, const std::function<void(const TwoRowedArray&)>& fn) {
  // Row value ranges under the bracket, inclusive on both ends.
  const bool top_closed = bracket == Bracket::XU_YV;
  const int c_lo = x + 1, c_hi = top_closed ? u : v - 1;
  const int d_lo = y, d_hi = top_closed ? v - 1 : u;

  std::vector<int> c(len_c), d(len_d);
  std::function<void(int, int)> rec_d = [&](int i, int prev) {
    if (i == len_d) {
      fn(TwoRowedArray(x, y, u, v, bracket, c, d));
      return;
    }
    for (int val = prev; val <= d_hi; ++val) {
      d[i] = val;
      rec_d(i + 1, val + 1);
    }
  };
  std::function<void(int, int)> rec_c = [&](int i, int prev) {
    if (i == len_c) {
      rec_d(0, d_lo);
      return;
    }
    for (int val = prev; val <= c_hi; ++val) {
      c[i] = val;
      rec_c(i + 1, val + 1);
    }
  };
  rec_c(0, c_lo);
}

}  // namespace latcross
