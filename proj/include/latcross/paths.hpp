#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "latcross/errors.hpp"

namespace latcross {

enum class Step : uint8_t { N, E };

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// A strictly northwest comparison; the partial order used to arrange
// endpoint pairs.
inline bool northwest(const Point& a, const Point& b) {
  return a.x < b.x && a.y > b.y;
}

// Monotone lattice path with unit north/east steps. The N/E word is the
// ground representation; a path flagged as a "UD view" reads N as an up
// step (1,1) and E as a down step (1,-1) for display and line statistics.
class LatticePath {
 public:
  LatticePath() = default;
  LatticePath(Point start, std::vector<Step> steps, bool ud_view = false)
      : start_(start), steps_(std::move(steps)), ud_view_(ud_view) {}

  const Point& start() const { return start_; }
  const std::vector<Step>& steps() const { return steps_; }
  int size() const { return static_cast<int>(steps_.size()); }
  bool ud_view() const { return ud_view_; }

  // Vertex after i steps in the N/E reading (0 <= i <= size()).
  Point vertex(int i) const;
  Point end() const { return vertex(size()); }

  // Height of the UD-view vertex after i steps (start.y + ups - downs).
  int height(int i) const;

  std::string word() const;  // N/E letters, or U/D letters in the UD view

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  Point start_;
  std::vector<Step> steps_;
  bool ud_view_ = false;
};

// Parses a word over {N,E} or {U,D}; a U/D word yields a UD-view path.
// Throws Error(mixed_alphabet) when letters of both alphabets (or unknown
// letters) appear.
LatticePath parse_path(const std::string& word, Point start = {0, 0});

struct PathStats {
  int des = 0;        // vertices preceded by E/D and followed by N/U
  long long maj = 0;  // sum of the 0-based positions of those vertices
  int peaks = 0;      // vertices preceded by N/U and followed by E/D
};

PathStats path_stats(const LatticePath& p);

enum class CrossKind { upward, downward };

struct Crossing {
  CrossKind kind;
  Point vertex;
  int index = 0;  // 1-based ordinal from the left
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Crossings of the horizontal line y = ell by a UD-view path: interior
// vertices on the line whose two incident steps agree (both up -> upward,
// both down -> downward). Vertex coordinates are (position, height).
std::vector<Crossing> line_crossings(const LatticePath& p, int ell);

// Transports a UD-view path of a up steps and b down steps to the N/E path
// from (ell, 0) to (b + ell, a); its line crossings at height ell become
// crossings of the main diagonal.
LatticePath to_diagonal(const LatticePath& p, int ell);

// Crossings of the main diagonal y = x by an N/E path: interior vertices on
// the diagonal whose two incident steps agree (both N -> upward, both E ->
// downward).
std::vector<Crossing> diagonal_crossings(const LatticePath& p);

// Crossings of the pair (p, q): maximal shared sub-walks whose entry and
// exit directions agree for each path separately, neither end being a path
// endpoint. The crossing sits at the last shared vertex; it is upward when
// p leaves with N and downward when p leaves with E.
std::vector<Crossing> pair_crossings(const LatticePath& p, const LatticePath& q);

// All N/E paths from a to b in lexicographic word order with N < E.
std::vector<LatticePath> enumerate_paths(Point a, Point b);

// Streaming variant; fn receives each step word (valid during the call).
void for_each_path(Point a, Point b, const std::function<void(const std::vector<Step>&)>& fn);

}  // namespace latcross
