#include "latcross/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "latcross/json_io.hpp"
#include "latcross/paths.hpp"

namespace latcross {

int default_threads() {
  if (const char* env = std::getenv("LATCROSS_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Tally of t^des q^maj per exact crossing count.
using Tally = std::vector<QTPoly>;

void tally_add(Tally& t, int cross, int des, long long maj) {
  if (cross >= static_cast<int>(t.size())) t.resize(cross + 1);
  t[cross].add_term(1, des, static_cast<int>(maj));
}

void tally_merge(Tally& into, const Tally& from) {
  if (from.size() > into.size()) into.resize(from.size());
  for (size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

// Exact-count tallies become at-least-r maps by suffix summation.
std::map<int, QTPoly> at_least(const Tally& t) {
  std::map<int, QTPoly> out;
  QTPoly acc;
  for (int r = static_cast<int>(t.size()) - 1; r >= 0; --r) {
    acc += t[r];
    out[r] = acc;
  }
  if (out.empty()) out[0] = QTPoly();
  return out;
}

// Walks every interleaving of dn north and de east steps extending the
// fixed prefix, maintaining descent statistics and line-crossing count
// incrementally. word holds the prefix; h is the running UD height.
struct LineWalker {
  int ell;
  Tally tally;

  void rec(std::vector<Step>& word, int dn, int de, int h, int cross, int des,
           long long maj) {
    if (dn == 0 && de == 0) {
      tally_add(tally, cross, des, maj);
      return;
    }
    const int i = static_cast<int>(word.size());  // position of the new vertex
    for (Step s : {Step::N, Step::E}) {
      if ((s == Step::N ? dn : de) == 0) continue;
      int cross2 = cross, des2 = des;
      long long maj2 = maj;
      if (i >= 1) {
        if (word[i - 1] == s && h == ell) cross2 += 1;
        if (word[i - 1] == Step::E && s == Step::N) {
          des2 += 1;
          maj2 += i;
        }
      }
      word.push_back(s);
      rec(word, s == Step::N ? dn - 1 : dn, s == Step::N ? de : de - 1,
          h + (s == Step::N ? 1 : -1), cross2, des2, maj2);
      word.pop_back();
    }
  }
};

// Splits the first split_steps choices across workers for a deterministic
// parallel partition; each worker enumerates the completions of its share
// of prefixes, and tallies merge in prefix order.
Tally run_line(int a, int b, int ell, int threads) {
  struct Prefix {
    std::vector<Step> word;
    int dn, de, h, cross, des;
    long long maj;
  };
  std::vector<Prefix> prefixes;
  int split_steps = 0;
  while (threads > (1 << split_steps)) ++split_steps;
  split_steps = std::min(split_steps, a + b);

  std::function<void(Prefix&)> expand = [&](Prefix& p) {
    if (static_cast<int>(p.word.size()) == split_steps) {
      prefixes.push_back(p);
      return;
    }
    const int i = static_cast<int>(p.word.size());
    for (Step s : {Step::N, Step::E}) {
      if ((s == Step::N ? p.dn : p.de) == 0) continue;
      Prefix next = p;
      if (i >= 1) {
        if (next.word[i - 1] == s && next.h == ell) next.cross += 1;
        if (next.word[i - 1] == Step::E && s == Step::N) {
          next.des += 1;
          next.maj += i;
        }
      }
      next.word.push_back(s);
      (s == Step::N ? next.dn : next.de) -= 1;
      next.h += s == Step::N ? 1 : -1;
      expand(next);
    }
  };
  Prefix root{{}, a, b, 0, 0, 0, 0};
  expand(root);

  std::vector<Tally> partial(prefixes.size());
  auto work = [&](size_t idx) {
    LineWalker w{ell, {}};
    Prefix& p = prefixes[idx];
    w.rec(p.word, p.dn, p.de, p.h, p.cross, p.des, p.maj);
    partial[idx] = std::move(w.tally);
  };
  if (threads <= 1 || prefixes.size() <= 1) {
    for (size_t i = 0; i < prefixes.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < prefixes.size();
             i = next.fetch_add(1))
          work(i);
      });
    for (auto& th : pool) th.join();
  }
  Tally total;
  for (const auto& part : partial) tally_merge(total, part);
  return total;
}

}  // namespace

std::map<int, QTPoly> oracle_g(int a, int b, int ell, int threads) {
  return at_least(run_line(a, b, ell, std::max(1, threads)));
}

namespace {

struct PathEntry {
  std::vector<Step> steps;
  std::vector<int> vx;  // vertex x-coordinates by position
  PathStats st;
};

// Allocation-free count of the definitional pair crossings: shared maximal
// sub-walks, interior to both paths, entered and left in the same direction
// by each path. Vertices on the common antidiagonal s agree exactly when
// their x-coordinates do.
int count_pair_crossings(const PathEntry& p, int sp0, int plen,
                         const PathEntry& q, int sq0, int qlen) {
  const int lo = std::max(sp0, sq0);
  const int hi = std::min(sp0 + plen, sq0 + qlen);
  int count = 0;
  int run_start = lo - 1;
  bool in_run = false;
  for (int s = lo; s <= hi + 1; ++s) {
    const bool shared =
        s <= hi && p.vx[s - sp0] == q.vx[s - sq0];
    if (shared && !in_run) {
      in_run = true;
      run_start = s;
    } else if (!shared && in_run) {
      in_run = false;
      const int i1 = run_start - sp0, i2 = s - 1 - sp0;
      const int j1 = run_start - sq0, j2 = s - 1 - sq0;
      if (i1 == 0 || j1 == 0 || i2 == plen || j2 == qlen) continue;
      if (p.steps[i1 - 1] != p.steps[i2]) continue;
      if (q.steps[j1 - 1] != q.steps[j2]) continue;
      ++count;
    }
  }
  return count;
}

}  // namespace

std::map<int, QTPoly> oracle_h(Point a1, Point a2, Point bp, Point bq,
                               int threads) {
  auto collect = [](Point from, Point to) {
    std::vector<PathEntry> out;
    for_each_path(from, to, [&](const std::vector<Step>& w) {
      PathEntry e;
      e.steps = w;
      e.vx.reserve(w.size() + 1);
      int x = from.x;
      e.vx.push_back(x);
      for (Step s : w) e.vx.push_back(s == Step::E ? ++x : x);
      e.st = path_stats(LatticePath(from, w));
      out.push_back(std::move(e));
    });
    return out;
  };
  const std::vector<PathEntry> ps = collect(a1, bp);
  const std::vector<PathEntry> qs = collect(a2, bq);
  const int sp0 = a1.x + a1.y, sq0 = a2.x + a2.y;

  const int nthreads = std::max(1, threads);
  std::vector<Tally> partial(nthreads);
  auto work = [&](int tid) {
    for (size_t i = tid; i < ps.size(); i += nthreads)
      for (const auto& qe : qs) {
        const int cross =
            count_pair_crossings(ps[i], sp0, static_cast<int>(ps[i].steps.size()),
                                 qe, sq0, static_cast<int>(qe.steps.size()));
        tally_add(partial[tid], cross, ps[i].st.des + qe.st.des,
                  ps[i].st.maj + qe.st.maj);
      }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Tally total;
  for (const auto& part : partial) tally_merge(total, part);
  return at_least(total);
}

std::string SweepReport::to_json_line() const {
  json j{{"query", query},
         {"formula", poly_to_json(formula)},
         {"oracle", poly_to_json(oracle)},
         {"equal", equal},
         {"objects", objects}};
  return j.dump();
}

std::vector<SweepReport> sweep_verify_line(int max_a, int max_b, int ell_margin,
                                           int r_cap, int threads) {
  std::vector<SweepReport> reports;
  for (int a = 0; a <= max_a; ++a)
    for (int b = 0; b <= max_b; ++b) {
      long long objects = 1;
      for (int i = 1; i <= b; ++i) objects = objects * (a + i) / i;
      for (int ell = -(b + ell_margin); ell <= a + ell_margin; ++ell) {
        const auto oracle = oracle_g(a, b, ell, threads);
        for (int r = 0; r <= std::min(r_cap, a + b); ++r) {
          SweepReport rep;
          std::ostringstream q;
          q << "g a=" << a << " b=" << b << " ell=" << ell << " r=" << r;
          rep.query = q.str();
          rep.formula = g_poly({a, b, ell, r});
          auto it = oracle.find(r);
          rep.oracle = it == oracle.end() ? QTPoly() : it->second;
          rep.equal = rep.formula == rep.oracle;
          rep.objects = objects;
          reports.push_back(std::move(rep));
        }
      }
    }
  return reports;
}

std::vector<SweepReport> sweep_verify_pairs(int window, int r_cap, int threads) {
  std::vector<SweepReport> reports;
  std::vector<Point> pts;
  for (int x = 0; x <= window; ++x)
    for (int y = 0; y <= window; ++y) pts.push_back({x, y});

  for (const Point& a1 : pts)
    for (const Point& a2 : pts) {
      if (a1.x + a1.y != a2.x + a2.y) continue;
      if (!(a1 == a2 || northwest(a1, a2))) continue;
      for (const Point& bp : pts)
        for (const Point& bq : pts) {
          if (bp.x < a1.x || bp.y < a1.y || bq.x < a2.x || bq.y < a2.y)
            continue;
          if (!(bp == bq || northwest(bp, bq) || northwest(bq, bp))) continue;
          const auto oracle = oracle_h(a1, a2, bp, bq, threads);
          long long objects = 0;
          {
            long long np = 1, nq = 1;
            for (int i = 1; i <= bp.y - a1.y; ++i)
              np = np * (bp.x - a1.x + i) / i;
            for (int i = 1; i <= bq.y - a2.y; ++i)
              nq = nq * (bq.x - a2.x + i) / i;
            objects = np * nq;
          }
          for (int r = 0; r <= r_cap; ++r) {
            PairQuery q;
            try {
              q = make_pair_query(a1, a2, bp, bq, r);
            } catch (const Error&) {
              continue;
            }
            const bool distinct = !(q.a1 == q.a2) && !(q.b1 == q.b2);
            if (distinct && q.assignment == Assignment::P_to_B1 && r == 0)
              continue;  // outside the dispatch, by design
            SweepReport rep;
            std::ostringstream qs;
            qs << "h a1=" << a1.x << "," << a1.y << " a2=" << a2.x << ","
               << a2.y << " bp=" << bp.x << "," << bp.y << " bq=" << bq.x
               << "," << bq.y << " r=" << r;
            rep.query = qs.str();
            rep.formula = h_poly(q);
            auto it = oracle.find(r);
            rep.oracle = it == oracle.end() ? QTPoly() : it->second;
            rep.equal = rep.formula == rep.oracle;
            rep.objects = objects;
            reports.push_back(std::move(rep));
          }
        }
    }
  return reports;
}

}  // namespace latcross
