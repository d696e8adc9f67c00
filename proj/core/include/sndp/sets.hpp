#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sndp {

// Vertex subsets are 64-bit masks; every instance is capped at 64
// vertices at validation time so that tight-set scans, laminar
// bookkeeping and the exhaustive checkers can enumerate subsets directly.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline VertexSet full_set(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }

inline VertexSet with_vertex(VertexSet s, int v) { return s | (VertexSet{1} << v); }

inline int set_size(VertexSet s) { return std::popcount(s); }

// Proper nonempty subset of [0, n).
inline bool is_proper(VertexSet s, int n) { return s != 0 && s != full_set(n); }

// a and b are laminar-compatible: disjoint or nested.
inline bool nested_or_disjoint(VertexSet a, VertexSet b) {
  VertexSet common = a & b;
  return common == 0 || common == a || common == b;
}

inline bool crossing(VertexSet a, VertexSet b) { return !nested_or_disjoint(a, b); }

inline std::vector<int> set_to_vector(VertexSet s) {
  std::vector<int> out;
  for (int v = 0; v < kMaxVertices; ++v)
    if (contains(s, v)) out.push_back(v);
  return out;
}

inline VertexSet set_from_vector(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s = with_vertex(s, v);
  return s;
}

}  // namespace sndp
