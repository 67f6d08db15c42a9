#include "latcross/qtpoly.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "latcross/errors.hpp"

namespace latcross {

QTPoly QTPoly::constant(Int c) {
  QTPoly p;
  p.add_term(c, 0, 0);
  return p;
}

QTPoly QTPoly::monomial(Int c, int t_exp, int q_exp) {
  if (t_exp < 0 || q_exp < 0)
    throw std::invalid_argument("negative exponent in monomial");
  QTPoly p;
  p.add_term(c, t_exp, q_exp);
  return p;
}

Int QTPoly::coeff(int t_exp, int q_exp) const {
  auto it = terms_.find({t_exp, q_exp});
  return it == terms_.end() ? Int(0) : it->second;
}

void QTPoly::add_term(const Int& c, int t_exp, int q_exp) {
  if (c == 0) return;
  if (t_exp < 0 || q_exp < 0)
    throw std::invalid_argument("negative exponent in add_term");
  auto [it, inserted] = terms_.emplace(Key{t_exp, q_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
  return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(-c, k.first, k.second);
  return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
  QTPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
  return r;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) {
  *this = *this * o;
  return *this;
}

QTPoly QTPoly::shifted(int dt, int dq) const {
  QTPoly r;
  for (const auto& [k, c] : terms_) r.add_term(c, k.first + dt, k.second + dq);
  return r;
}

Int QTPoly::value_at_one() const {
  Int s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

std::map<int, Int> QTPoly::t_profile_at_q1() const {
  std::map<int, Int> r;
  for (const auto& [k, c] : terms_) r[k.first] += c;
  for (auto it = r.begin(); it != r.end();)
    it = (it->second == 0) ? r.erase(it) : std::next(it);
  return r;
}

namespace {

void append_var(std::ostream& os, bool& lead, const char* var, int e) {
  if (e == 0) return;
  if (!lead) os << "*";
  os << var;
  if (e != 1) os << "^" << e;
  lead = false;
}

}  // namespace

std::string QTPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool lead = true;
    if (c != 1 || (k.first == 0 && k.second == 0)) {
      os << c;
      lead = false;
    }
    append_var(os, lead, "t", k.first);
    append_var(os, lead, "q", k.second);
  }
  return os.str();
}

std::string QTPoly::to_latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool bare = true;
    if (c != 1 || (k.first == 0 && k.second == 0)) {
      os << c;
      bare = false;
    }
    for (auto [var, e] : {std::pair{"t", k.first}, std::pair{"q", k.second}}) {
      if (e == 0) continue;
      os << var;
      if (e != 1) os << "^{" << e << "}";
      bare = false;
    }
    (void)bare;
  }
  return os.str();
}

QTPoly one_minus_q_pow(int a) {
  if (a < 1) throw std::invalid_argument("one_minus_q_pow needs a >= 1");
  QTPoly p = QTPoly::constant(1);
  p.add_term(-1, 0, a);
  return p;
}

QTPoly exact_div_one_minus_q_pow(const QTPoly& p, int a) {
  if (a < 1) throw std::invalid_argument("divisor exponent must be >= 1");
  if (p.is_zero()) return p;
  // Per t-slice long division from the low end: r_j = p_j + r_{j-a}.
  std::map<int, std::map<int, Int>> slices;
  for (const auto& [k, c] : p.terms()) slices[k.first][k.second] = c;
  QTPoly result;
  for (auto& [t_exp, slice] : slices) {
    int deg = slice.rbegin()->first;
    std::vector<Int> r(static_cast<size_t>(deg) + 1, Int(0));
    for (int j = 0; j <= deg; ++j) {
      Int pj = 0;
      if (auto it = slice.find(j); it != slice.end()) pj = it->second;
      r[j] = pj + (j >= a ? r[j - a] : Int(0));
    }
    // The quotient must vanish on the top a coefficients or the division
    // leaves a remainder.
    for (int j = std::max(0, deg - a + 1); j <= deg; ++j)
      if (r[j] != 0)
        throw Error(Errc::non_divisible,
                    "remainder at t^" + std::to_string(t_exp) + " q^" +
                        std::to_string(j));
    for (int j = 0; j + a <= deg; ++j) result.add_term(r[j], t_exp, j);
  }
  return result;
}

QTPoly qbinom(int m, int n) {
  if (n < 0 || m < 0 || n > m) return QTPoly();
  n = std::min(n, m - n);
  static std::map<std::pair<int, int>, QTPoly> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lk(mu);
    if (auto it = cache.find({m, n}); it != cache.end()) return it->second;
  }
  // Product form with interleaved exact division keeps every intermediate
  // value a genuine polynomial.
  QTPoly p = QTPoly::constant(1);
  for (int i = 1; i <= n; ++i) {
    p *= one_minus_q_pow(m - n + i);
    p = exact_div_one_minus_q_pow(p, i);
  }
  std::lock_guard<std::mutex> lk(mu);
  if (m <= 128) cache.emplace(std::pair{m, n}, p);
  return p;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::mixed_alphabet: return "MIXED_ALPHABET";
    case Errc::shape_mismatch: return "SHAPE_MISMATCH";
    case Errc::no_such_crossing: return "NO_SUCH_CROSSING";
    case Errc::wrong_kind: return "WRONG_KIND";
    case Errc::improper_crossing: return "IMPROPER_CROSSING";
    case Errc::not_in_domain: return "NOT_IN_DOMAIN";
    case Errc::improper_position: return "IMPROPER_POSITION";
    case Errc::non_divisible: return "NON_DIVISIBLE";
    case Errc::unsupported_configuration: return "UNSUPPORTED_CONFIGURATION";
    case Errc::condition_13_violated: return "CONDITION_13_VIOLATED";
  }
  return "UNKNOWN";
}

}  // namespace latcross
