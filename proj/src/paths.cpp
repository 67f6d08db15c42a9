#include "latcross/paths.hpp"

#include <algorithm>

namespace latcross {

Point LatticePath::vertex(int i) const {
  Point p = start_;
  for (int j = 0; j < i; ++j)
    (steps_[j] == Step::N ? p.y : p.x) += 1;
  return p;
}

int LatticePath::height(int i) const {
  int h = start_.y;
  for (int j = 0; j < i; ++j) h += steps_[j] == Step::N ? 1 : -1;
  return h;
}

std::string LatticePath::word() const {
  std::string w;
  w.reserve(steps_.size());
  for (Step s : steps_)
    w.push_back(ud_view_ ? (s == Step::N ? 'U' : 'D') : (s == Step::N ? 'N' : 'E'));
  return w;
}

LatticePath parse_path(const std::string& word, Point start) {
  bool has_ne = false, has_ud = false;
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (char ch : word) {
    switch (ch) {
      case 'N': has_ne = true; steps.push_back(Step::N); break;
      case 'E': has_ne = true; steps.push_back(Step::E); break;
      case 'U': has_ud = true; steps.push_back(Step::N); break;
      case 'D': has_ud = true; steps.push_back(Step::E); break;
      default:
        throw Error(Errc::mixed_alphabet,
                    std::string("unknown step letter '") + ch + "'");
    }
  }
  if (has_ne && has_ud)
    throw Error(Errc::mixed_alphabet, "word mixes N/E and U/D letters");
  return LatticePath(start, std::move(steps), has_ud);
}

PathStats path_stats(const LatticePath& p) {
  PathStats st;
  const auto& s = p.steps();
  for (int i = 1; i < static_cast<int>(s.size()); ++i) {
    if (s[i - 1] == Step::E && s[i] == Step::N) {
      st.des += 1;
      st.maj += i;
    } else if (s[i - 1] == Step::N && s[i] == Step::E) {
      st.peaks += 1;
    }
  }
  return st;
}

std::vector<Crossing> line_crossings(const LatticePath& p, int ell) {
  std::vector<Crossing> out;
  const auto& s = p.steps();
  int h = p.start().y;
  for (int i = 1; i < static_cast<int>(s.size()); ++i) {
    h += s[i - 1] == Step::N ? 1 : -1;
    if (h == ell && s[i - 1] == s[i])
      out.push_back({s[i] == Step::N ? CrossKind::upward : CrossKind::downward,
                     {p.start().x + i, h},
                     static_cast<int>(out.size()) + 1});
  }
  return out;
}

LatticePath to_diagonal(const LatticePath& p, int ell) {
  return LatticePath({ell, 0}, p.steps(), false);
}

std::vector<Crossing> diagonal_crossings(const LatticePath& p) {
  std::vector<Crossing> out;
  const auto& s = p.steps();
  Point v = p.start();
  for (int i = 1; i < static_cast<int>(s.size()); ++i) {
    (s[i - 1] == Step::N ? v.y : v.x) += 1;
    if (v.x == v.y && s[i - 1] == s[i])
      out.push_back({s[i] == Step::N ? CrossKind::upward : CrossKind::downward,
                     v, static_cast<int>(out.size()) + 1});
  }
  return out;
}

std::vector<Crossing> pair_crossings(const LatticePath& p, const LatticePath& q) {
  std::vector<Crossing> out;
  // A monotone path meets each antidiagonal x+y = s at most once, so the
  // shared vertices are found by sliding s over the common range.
  const int sp0 = p.start().x + p.start().y;
  const int sq0 = q.start().x + q.start().y;
  const int lo = std::max(sp0, sq0);
  const int hi = std::min(sp0 + p.size(), sq0 + q.size());

  std::vector<Point> pv(p.size() + 1), qv(q.size() + 1);
  pv[0] = p.start();
  for (int i = 1; i <= p.size(); ++i) {
    pv[i] = pv[i - 1];
    (p.steps()[i - 1] == Step::N ? pv[i].y : pv[i].x) += 1;
  }
  qv[0] = q.start();
  for (int j = 1; j <= q.size(); ++j) {
    qv[j] = qv[j - 1];
    (q.steps()[j - 1] == Step::N ? qv[j].y : qv[j].x) += 1;
  }

  int run_start = -1;  // antidiagonal where the current shared run began
  auto close_run = [&](int run_end) {
    if (run_start < 0) return;
    const int i1 = run_start - sp0, i2 = run_end - sp0;  // p positions
    const int j1 = run_start - sq0, j2 = run_end - sq0;  // q positions
    run_start = -1;
    // Neither end of the shared walk may be an endpoint of either path.
    if (i1 == 0 || j1 == 0 || i2 == p.size() || j2 == q.size()) return;
    // Arrival direction at the first shared vertex must match the departure
    // direction at the last one, for each path separately.
    if (p.steps()[i1 - 1] != p.steps()[i2]) return;
    if (q.steps()[j1 - 1] != q.steps()[j2]) return;
    out.push_back({p.steps()[i2] == Step::N ? CrossKind::upward : CrossKind::downward,
                   pv[i2], static_cast<int>(out.size()) + 1});
  };

  for (int s = lo; s <= hi; ++s) {
    if (pv[s - sp0] == qv[s - sq0]) {
      if (run_start < 0) run_start = s;
      if (s == hi) close_run(s);
    } else {
      close_run(s - 1);
    }
  }
  return out;
}

namespace {

void enum_rec(std::vector<Step>& word, int dn, int de,
              const std::function<void(const std::vector<Step>&)>& fn) {
  if (dn == 0 && de == 0) {
    fn(word);
    return;
  }
  if (dn > 0) {
    word.push_back(Step::N);
    enum_rec(word, dn - 1, de, fn);
    word.pop_back();
  }
  if (de > 0) {
    word.push_back(Step::E);
    enum_rec(word, dn, de - 1, fn);
    word.pop_back();
  }
}

}  // namespace

void for_each_path(Point a, Point b,
                   const std::function<void(const std::vector<Step>&)>& fn) {
  if (b.x < a.x || b.y < a.y) return;
  std::vector<Step> word;
  word.reserve((b.x - a.x) + (b.y - a.y));
  enum_rec(word, b.y - a.y, b.x - a.x, fn);
}

std::vector<LatticePath> enumerate_paths(Point a, Point b) {
  std::vector<LatticePath> out;
  for_each_path(a, b, [&](const std::vector<Step>& w) { out.emplace_back(a, w); });
  return out;
}

}  // namespace latcross
