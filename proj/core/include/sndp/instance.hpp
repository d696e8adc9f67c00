#pragma once

#include "sndp/rational.hpp"
#include "sndp/sets.hpp"

#include <map>
#include <set>
#include <utility>
#include <variant>
#include <vector>

namespace sndp {

// Undirected multigraph. Edges are addressed by id (their index here);
// all downstream bookkeeping is by edge-id so parallel edges stay
// distinct objects.
struct Edge {
  int u = 0;
  int v = 0;
  Rational cost;
};

struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(int vertex) const;
};

// A hyperedge is a vertex subset of size >= 2, kept sorted.
struct Hyperedge {
  std::vector<int> vertices;
  Rational cost;

  VertexSet mask() const { return set_from_vector(vertices); }
  int size() const { return static_cast<int>(vertices.size()); }
};

struct Hypergraph {
  int n = 0;
  std::vector<Hyperedge> hyperedges;

  int edge_count() const { return static_cast<int>(hyperedges.size()); }
};

// Graphs are the degree-2 special case; edge ids are preserved.
Hypergraph as_hypergraph(const Graph& graph);

// Max size of a hyperedge with non-zero cost; 0 if every cost is zero.
int dplus(const Hypergraph& h);

// e crosses S: at least one endpoint inside and one outside.
inline bool edge_crosses(VertexSet edge_mask, VertexSet s, int n) {
  return (edge_mask & s) != 0 && (edge_mask & full_set(n) & ~s) != 0;
}

// Ids of hyperedges in h crossing S.
std::vector<int> delta_ids(const Hypergraph& h, VertexSet s);

// Symmetric integer requirements on unordered vertex pairs; absent
// pairs mean 0, zero values are not stored.
class PairRequirements {
 public:
  void set(int u, int v, int r);
  int get(int u, int v) const;
  int rmax() const;
  bool empty() const { return table_.empty(); }

  // (u, v, r) with u < v in lexicographic order.
  const std::map<std::pair<int, int>, int>& pairs() const { return table_; }

  bool operator==(const PairRequirements&) const = default;

 private:
  std::map<std::pair<int, int>, int> table_;
};

struct EcInstance {
  Graph graph;
  PairRequirements requirements;

  bool operator==(const EcInstance&) const;
};

struct ElemInstance {
  Graph graph;
  std::set<int> terminals;
  PairRequirements requirements;              // support on terminal pairs only
  std::map<int, Rational> node_weights;       // keys are non-terminals only

  bool is_terminal(int v) const { return terminals.count(v) > 0; }
  bool operator==(const ElemInstance&) const;
};

struct HyperInstance {
  Hypergraph hyper;
  PairRequirements requirements;

  bool operator==(const HyperInstance&) const;
};

using Instance = std::variant<EcInstance, ElemInstance, HyperInstance>;

enum class InstanceKind { Ec, Elem, Hyper };

InstanceKind kind_of(const Instance& instance);
const char* kind_name(InstanceKind kind);

// Structural checks shared by the parser and the generators; throws
// ValidationError with a field path on the first violation.
void validate(const EcInstance& instance);
void validate(const ElemInstance& instance);
void validate(const HyperInstance& instance);
void validate(const Instance& instance);

}  // namespace sndp
