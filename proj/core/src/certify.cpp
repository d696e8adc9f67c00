#include "sndp/certify.hpp"

#include "sndp/errors.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace sndp {

bool LaminarFamily::laminar() const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (crossing(nodes[i].set, nodes[j].set)) return false;
  return true;
}

LaminarFamily build_forest(const std::vector<std::pair<VertexSet, int>>& sets_with_values) {
  LaminarFamily family;
  for (const auto& [set, value] : sets_with_values) family.nodes.push_back({set, value, -1, {}});
  std::sort(family.nodes.begin(), family.nodes.end(), [](const auto& a, const auto& b) {
    return std::pair(set_size(a.set), a.set) < std::pair(set_size(b.set), b.set);
  });
  if (!family.laminar()) throw ValidationError("sets do not form a laminar family");

  // Parent = smallest strict superset; nodes are sorted by size.
  for (int i = 0; i < static_cast<int>(family.nodes.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(family.nodes.size()); ++j) {
      VertexSet a = family.nodes[i].set, b = family.nodes[j].set;
      if (a != b && (a & b) == a) {
        family.nodes[i].parent = j;
        family.nodes[j].children.push_back(i);
        break;
      }
    }
    if (family.nodes[i].parent < 0) family.roots.push_back(i);
  }
  return family;
}

EdgePartition classify_edges(const Graph& graph, const std::vector<int>& edge_ids,
                             VertexSet s, const std::vector<VertexSet>& children) {
  auto locate = [&](int vertex) -> int {
    // 0 = outside S, 1 = interior (in S, in no child), 2+k = child k
    if (!contains(s, vertex)) return 0;
    for (std::size_t k = 0; k < children.size(); ++k)
      if (contains(children[k], vertex)) return 2 + static_cast<int>(k);
    return 1;
  };

  EdgePartition partition;
  for (int id : edge_ids) {
    const Edge& e = graph.edges.at(id);
    int a = locate(e.u), b = locate(e.v);
    if (a > b) std::swap(a, b);
    if (a >= 2 && b >= 2 && a != b) partition.cc.push_back(id);
    else if (a == 1 && b >= 2) partition.cp.push_back(id);
    else if (a == 0 && b == 1) partition.po.push_back(id);
    else if (a == 0 && b >= 2) partition.co.push_back(id);
    // same child, both interior, or both outside: not relevant to S
  }
  return partition;
}

namespace {

struct TightSet {
  VertexSet set = 0;
  int f_value = 0;
};

class LaminarBuilder {
 public:
  LaminarBuilder(const VertexSolution& sol, const RequirementFn& f, const Graph& graph,
                 const std::vector<int>& edge_ids)
      : sol_(sol), f_(f), graph_(graph), edge_ids_(edge_ids),
        tracker_(static_cast<int>(edge_ids.size())) {}

  LaminarExtraction run() {
    const int n = graph_.n;
    const int m = static_cast<int>(edge_ids_.size());
    LaminarExtraction out;

    // All tight sets with positive requirement, by (size, mask).
    std::vector<TightSet> tights;
    const VertexSet all = full_set(n);
    for (VertexSet s = 1; s < all; ++s) {
      int value = f_.eval(s);
      if (value >= 1 && cut_load(s) == value) tights.push_back({s, value});
    }
    std::sort(tights.begin(), tights.end(), [](const TightSet& a, const TightSet& b) {
      return std::pair(set_size(a.set), a.set) < std::pair(set_size(b.set), b.set);
    });

    std::vector<char> resolved(tights.size(), 0);
    while (true) {
      // Unspanned tight set crossing the fewest family members.
      int pick = -1, pick_crossings = 0;
      for (std::size_t i = 0; i < tights.size(); ++i) {
        if (resolved[i]) continue;
        if (tracker_.in_span(cut_vector(tights[i].set))) {
          resolved[i] = 1;
          continue;
        }
        int c = crossings(tights[i].set);
        if (pick < 0 || c < pick_crossings) {
          pick = static_cast<int>(i);
          pick_crossings = c;
        }
      }
      if (pick < 0) break;

      // Descend through uncrossings until the set is laminar with the
      // family; every step keeps the vector outside the current span and
      // strictly reduces the number of crossed members.
      VertexSet s = tights[pick].set;
      while (true) {
        const LaminarFamily::Node* blocker = nullptr;
        for (const auto& node : members_)
          if (crossing(s, node.set)) {
            blocker = &node;
            break;
          }
        if (!blocker) break;
        auto next = uncross_step(s, blocker->set);
        if (!next) {
          out.ok = false;
          out.failure = failure_;
          return out;
        }
        s = *next;
      }
      members_.push_back({s, f_.eval(s), -1, {}});
      bool added = tracker_.add_if_independent(cut_vector(s));
      assert(added);
      (void)added;
    }

    out.rank = tracker_.rank();
    if (out.rank < m) {
      out.ok = false;
      out.failure = "not a vertex: independent tight cuts " + std::to_string(out.rank) +
                    " < " + std::to_string(m) + " edges";
      return out;
    }

    // The family system must reproduce the solution uniquely.
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> rhs;
    for (const auto& node : members_) {
      matrix.push_back(cut_vector(node.set));
      rhs.push_back(Rational(node.f_value));
    }
    auto solved = detail::solve_square(matrix, rhs);
    if (!solved) {
      out.ok = false;
      out.failure = "family system is singular";
      return out;
    }
    for (int j = 0; j < m; ++j) {
      if ((*solved)[j] != sol_.x.at(edge_ids_[j])) {
        out.ok = false;
        out.failure = "family system does not reproduce the solution";
        return out;
      }
    }

    std::vector<std::pair<VertexSet, int>> sets;
    for (const auto& node : members_) sets.emplace_back(node.set, node.f_value);
    out.family = build_forest(sets);
    out.ok = true;
    return out;
  }

 private:
  Rational cut_load(VertexSet s) const {
    Rational total(0);
    for (int id : edge_ids_) {
      const Edge& e = graph_.edges.at(id);
      if (contains(s, e.u) != contains(s, e.v)) total += sol_.x.at(id);
    }
    return total;
  }

  std::vector<Rational> cut_vector(VertexSet s) const {
    std::vector<Rational> v(edge_ids_.size(), Rational(0));
    for (std::size_t j = 0; j < edge_ids_.size(); ++j) {
      const Edge& e = graph_.edges.at(edge_ids_[j]);
      if (contains(s, e.u) != contains(s, e.v)) v[j] = 1;
    }
    return v;
  }

  int crossings(VertexSet s) const {
    int c = 0;
    for (const auto& node : members_) c += crossing(s, node.set);
    return c;
  }

  // Replaces s (crossing l) by one uncrossed piece whose cut vector is
  // still outside the span. The tight skew-supermodular branch decides
  // between (intersection, union) and the two differences; intersection/
  // union is preferred when both branches hold.
  std::optional<VertexSet> uncross_step(VertexSet s, VertexSet l) {
    const int n = graph_.n;
    int fs = f_.eval(s), fl = f_.eval(l);
    VertexSet inter = s & l, uni = s | l;
    VertexSet diff_sl = s & ~l, diff_ls = l & ~s;

    std::pair<VertexSet, VertexSet> pieces;
    if (fs + fl <= f_.eval(inter) + f_.eval(uni))
      pieces = {inter, uni};
    else if (fs + fl <= f_.eval(diff_sl) + f_.eval(diff_ls))
      pieces = {diff_sl, diff_ls};
    else {
      failure_ = "requirement function is not skew-supermodular on a crossing tight pair";
      return std::nullopt;
    }

    for (VertexSet piece : {pieces.first, pieces.second}) {
      if (!is_proper(piece, n)) continue;
      int value = f_.eval(piece);
      if (value < 1) continue;
      if (cut_load(piece) != value) {
        failure_ = "uncrossing produced a non-tight set (input is not a certified vertex)";
        return std::nullopt;
      }
      if (!tracker_.in_span(cut_vector(piece))) return piece;
    }
    failure_ = "uncrossing lost the cut vector (input is not a certified vertex)";
    return std::nullopt;
  }

  const VertexSolution& sol_;
  const RequirementFn& f_;
  const Graph& graph_;
  const std::vector<int>& edge_ids_;
  detail::RankTracker tracker_;
  std::vector<LaminarFamily::Node> members_;
  std::string failure_;
};

}  // namespace

LaminarExtraction extract_laminar_basis(const VertexSolution& sol, const RequirementFn& f,
                                        const Graph& graph, const std::vector<int>& edge_ids) {
  if (graph.n > 12) throw LimitError("tight-set enumeration is capped at n <= 12");
  for (int id : edge_ids) {
    const Rational& value = sol.x.at(id);
    if (value <= 0 || value >= 1)
      throw ValidationError("laminar extraction requires a fully fractional solution");
  }
  return LaminarBuilder(sol, f, graph, edge_ids).run();
}

HalfEdgeResult check_half_edge(const VertexSolution& sol) {
  HalfEdgeResult result;
  result.max_coordinate = sol.max_coordinate();
  result.ok = result.max_coordinate >= make_rational(1, 2);
  return result;
}

std::pair<Rational, Rational> counting_identity_sides(const LaminarFamily& family,
                                                      int node_index,
                                                      const EdgePartition& partition,
                                                      const VertexSolution& sol) {
  const auto& node = family.nodes.at(node_index);
  Rational lhs(-node.f_value);
  for (int child : node.children) lhs += family.nodes[child].f_value;

  Rational rhs(0);
  for (int id : partition.cc) rhs += 2 * sol.x.at(id);
  for (int id : partition.cp) rhs += sol.x.at(id);
  for (int id : partition.po) rhs -= sol.x.at(id);
  return {lhs, rhs};
}

namespace {

int count_inside(const Graph& graph, const std::vector<int>& edge_ids, VertexSet s) {
  int count = 0;
  for (int id : edge_ids) {
    const Edge& e = graph.edges.at(id);
    if (contains(s, e.u) && contains(s, e.v)) ++count;
  }
  return count;
}

int alpha_of(const LaminarFamily& family, VertexSet s) {
  int count = 0;
  for (const auto& node : family.nodes) {
    VertexSet common = node.set & s;
    if (common == node.set) ++count;
  }
  return count;
}

std::vector<VertexSet> child_sets(const LaminarFamily& family, int index) {
  std::vector<VertexSet> out;
  for (int child : family.nodes[index].children) out.push_back(family.nodes[child].set);
  return out;
}

}  // namespace

IdentityReport check_counting_identity(const LaminarFamily& family, const VertexSolution& sol,
                                       const Graph& graph, const std::vector<int>& edge_ids) {
  IdentityReport report;

  for (int i = 0; i < static_cast<int>(family.nodes.size()); ++i) {
    if (family.nodes[i].children.empty()) continue;
    EdgePartition partition = classify_edges(graph, edge_ids, family.nodes[i].set,
                                             child_sets(family, i));
    auto [lhs, rhs] = counting_identity_sides(family, i, partition, sol);
    if (lhs != rhs && report.eq_tightness) {
      report.eq_tightness = false;
      report.failing_set = family.nodes[i].set;
      report.detail = "tightness identity: " + rational_to_string(lhs) +
                      " != " + rational_to_string(rhs);
    }
    int beta_s = count_inside(graph, edge_ids, family.nodes[i].set);
    int beta_children = 0;
    for (int child : family.nodes[i].children)
      beta_children += count_inside(graph, edge_ids, family.nodes[child].set);
    if (beta_s != partition.gamma() + beta_children && report.beta_recursion) {
      report.beta_recursion = false;
      if (!report.failing_set) report.failing_set = family.nodes[i].set;
      report.detail += std::string(report.detail.empty() ? "" : "; ") +
                       "beta recursion: " + std::to_string(beta_s) + " != " +
                       std::to_string(partition.gamma() + beta_children);
    }
  }

  int alpha_sum = 0;
  for (int root : family.roots) alpha_sum += alpha_of(family, family.nodes[root].set);
  if (alpha_sum != static_cast<int>(family.nodes.size())) {
    report.alpha_root_sum = false;
    report.detail += std::string(report.detail.empty() ? "" : "; ") +
                     "root alpha sum " + std::to_string(alpha_sum) + " != |L| " +
                     std::to_string(family.nodes.size());
  }
  return report;
}

UniqueChildResult check_unique_child(const LaminarFamily& family, const Graph& graph,
                                     const std::vector<int>& edge_ids) {
  UniqueChildResult result;
  for (const auto& node : family.nodes) {
    if (node.children.size() != 1) continue;
    VertexSet ring = node.set & ~family.nodes[node.children[0]].set;
    int endpoints = 0;
    for (int id : edge_ids) {
      const Edge& e = graph.edges.at(id);
      endpoints += contains(ring, e.u);
      endpoints += contains(ring, e.v);
    }
    if (endpoints < 2) {
      result.ok = false;
      result.failing_set = node.set;
      return result;
    }
  }
  return result;
}

std::vector<ClaimRow> claim_report(const LaminarFamily& family, const Graph& graph,
                                   const std::vector<int>& edge_ids) {
  std::vector<ClaimRow> rows;
  for (const auto& node : family.nodes) {
    ClaimRow row;
    row.set = node.set;
    row.f_value = node.f_value;
    row.alpha = alpha_of(family, node.set);
    row.beta = count_inside(graph, edge_ids, node.set);
    row.satisfied = node.f_value >= row.alpha - row.beta;
    rows.push_back(row);
  }
  return rows;
}

bool VertexCertification::all_ok() const {
  return vertex_ok && half_edge.ok && identities.all_ok() && unique_child_ok;
}

nlohmann::json VertexCertification::to_json() const {
  nlohmann::json claim = nlohmann::json::array();
  for (const ClaimRow& row : claim_table)
    claim.push_back({{"set", set_to_vector(row.set)},
                     {"f", row.f_value},
                     {"alpha", row.alpha},
                     {"beta", row.beta},
                     {"satisfied", row.satisfied}});
  nlohmann::json j{
      {"vertex_ok", vertex_ok},
      {"half_edge",
       {{"max", rational_to_string(half_edge.max_coordinate)}, {"ok", half_edge.ok}}},
      {"laminar", {{"size", laminar_size}, {"rank", laminar_rank}}},
      {"identities",
       {{"eq3", identities.eq_tightness},
        {"beta", identities.beta_recursion},
        {"alpha_root", identities.alpha_root_sum}}},
      {"unique_child", unique_child_ok},
      {"claim_table", claim}};
  if (!failure.empty()) j["failure"] = failure;
  return j;
}

VertexCertification certify_fractional_vertex(const VertexSolution& sol, const RequirementFn& f,
                                              const Graph& graph,
                                              const std::vector<int>& edge_ids) {
  VertexCertification cert;
  cert.half_edge = check_half_edge(sol);

  LaminarExtraction extraction = extract_laminar_basis(sol, f, graph, edge_ids);
  cert.vertex_ok = extraction.ok;
  cert.laminar_rank = extraction.rank;
  cert.laminar_size = static_cast<int>(extraction.family.nodes.size());
  cert.failure = extraction.failure;
  if (!extraction.ok) return cert;

  cert.identities = check_counting_identity(extraction.family, sol, graph, edge_ids);
  cert.unique_child_ok = check_unique_child(extraction.family, graph, edge_ids).ok;
  cert.claim_table = claim_report(extraction.family, graph, edge_ids);
  return cert;
}

}  // namespace sndp
