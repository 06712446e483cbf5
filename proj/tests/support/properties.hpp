#pragma once

// Property checks shared by the unit tests and the acceptance runner. Each
// returns an empty string on success and a description otherwise.

#include <string>
#include <vector>

#include "arbopack/conditions.hpp"
#include "arbopack/orient.hpp"
#include "arbopack/pieo.hpp"
#include "fixtures.hpp"

namespace properties {

using namespace arbopack;

inline std::string show(const SetFamily& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += "{";
    bool first = true;
    f[i].for_each([&](VertexId v) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    });
    s += "}";
  }
  return s + "]";
}

/// Number of members containing x.
inline std::size_t coverage(const SetFamily& f, VertexId x) {
  std::size_t c = 0;
  for (auto s : f) c += s.contains(x) ? 1 : 0;
  return c;
}

/// Runs type-1 laminarization and checks, per step, that the member count
/// and element coverage are conserved and that crossing pairs are maximal;
/// at the end, that the result is laminar, the maximal/remainder split is
/// consistent, counts and unions are conserved and both parts are disjoint.
inline std::string check_laminarization(const SetFamily& f1, const SetFamily& f2, const LaminarizeOptions& base,
                                        std::size_t ground) {
  std::string problem;
  const SetFamily initial = [&] {
    SetFamily all = f1;
    all.insert(all.end(), f2.begin(), f2.end());
    return all;
  }();
  std::size_t observed = 0;
  LaminarizeOptions options = base;
  options.observer = [&](const SetFamily& g) {
    ++observed;
    if (!problem.empty()) return;
    if (g.size() != initial.size()) problem = "member count changed at " + show(g);
    for (VertexId x = 0; x < ground && problem.empty(); ++x) {
      if (coverage(g, x) != coverage(initial, x)) problem = "coverage of " + std::to_string(x) + " changed";
    }
    if (problem.empty() && !properly_intersecting_pairs_are_maximal(g)) {
      problem = "a properly intersecting pair is not maximal in " + show(g);
    }
  };
  const auto trace = laminarize_type1(f1, f2, options);
  if (!problem.empty()) return problem;
  if (observed != trace.steps.size() + 1) return "observer was not called once per family";
  if (!is_laminar(trace.final)) return "final family is not laminar: " + show(trace.final);
  if (trace.maximal.size() + trace.remainder.size() != trace.final.size()) return "split loses members";
  if (f1.size() + f2.size() != trace.maximal.size() + trace.remainder.size()) return "member count not conserved";
  if (family_union(trace.maximal) != (family_union(f1) | family_union(f2))) return "union of maximal members";
  if (family_union(trace.remainder) != (family_union(f1) & family_union(f2))) return "union of remainder";
  if (!is_disjoint_family(trace.maximal)) return "maximal members not disjoint: " + show(trace.maximal);
  if (!is_disjoint_family(trace.remainder)) return "remainder not disjoint: " + show(trace.remainder);
  for (auto x : trace.remainder) {
    bool inside = false;
    for (auto y : trace.maximal) inside = inside || (x.is_subset_of(y));
    if (!inside) return "remainder member outside every maximal member";
  }
  return {};
}

/// Orientation of the edges used in the uncrossing inequality's proof:
/// into the union of the first family when exactly its head side is
/// inside it, else into the union of the second family likewise, else
/// along the stored endpoint order.
inline std::vector<Arc> auxiliary_orientation(const MixedGraph& g, VertexSet u1, VertexSet u2) {
  std::vector<Arc> out;
  for (const auto& e : g.edges()) {
    if (!u1.contains(e.u) && u1.contains(e.v)) {
      out.push_back({e.u, e.v});
    } else if (!u1.contains(e.v) && u1.contains(e.u)) {
      out.push_back({e.v, e.u});
    } else if (!u2.contains(e.u) && u2.contains(e.v)) {
      out.push_back({e.u, e.v});
    } else if (!u2.contains(e.v) && u2.contains(e.u)) {
      out.push_back({e.v, e.u});
    } else {
      out.push_back({e.u, e.v});
    }
  }
  return out;
}

inline std::int64_t in_degree(const std::vector<Arc>& arcs, VertexSet x) {
  std::int64_t d = 0;
  for (const auto& a : arcs) d += (x.contains(a.head) && !x.contains(a.tail)) ? 1 : 0;
  return d;
}

inline std::int64_t sum_in_degree(const std::vector<Arc>& arcs, const SetFamily& f) {
  std::int64_t d = 0;
  for (auto x : f) d += in_degree(arcs, x);
  return d;
}

/// value(P1) + value(P2) >= value(F3) + value(F4) + |E(P1, P2)| where F3, F4
/// come from type-1 laminarization of P1 and P2. Also checks the edge
/// identities of the auxiliary orientation the argument rests on.
inline std::string check_uncrossing_inequality(const MixedGraph& g, const Subpartition& p1, const Subpartition& p2) {
  const auto trace = laminarize_type1(fixtures::to_family(p1), fixtures::to_family(p2));
  const Subpartition p3(trace.maximal);
  const Subpartition p4(trace.remainder);
  const auto u1 = p1.support();
  const auto u2 = p2.support();
  const auto crossing = static_cast<std::int64_t>(crossing_edge_set(g, u1, u2).size());

  const auto aux = auxiliary_orientation(g, u1, u2);
  if (crossing_edges(g, p1) != sum_in_degree(aux, fixtures::to_family(p1))) return "edge identity for P1";
  if (crossing_edges(g, p2) != sum_in_degree(aux, fixtures::to_family(p2)) + crossing) return "edge identity for P2";
  if (crossing_edges(g, p3) != sum_in_degree(aux, trace.maximal)) return "edge identity for F3";
  if (crossing_edges(g, p4) != sum_in_degree(aux, trace.remainder)) return "edge identity for F4";

  std::vector<Arc> combined(g.arcs().begin(), g.arcs().end());
  combined.insert(combined.end(), aux.begin(), aux.end());
  if (sum_in_degree(combined, trace.initial) < sum_in_degree(combined, trace.final)) {
    return "combined in-degree sum increased";
  }
  const auto lhs = family_value(g, p1) + family_value(g, p2);
  const auto rhs = family_value(g, p3) + family_value(g, p4) + crossing;
  if (lhs < rhs) {
    return "inequality fails: " + std::to_string(lhs) + " < " + std::to_string(rhs) + " for " +
           describe(g, p1) + " and " + describe(g, p2);
  }
  return {};
}

/// No edge joins U1 - U2 to U2 - U1 for any two tight families.
inline std::string check_tight_pairs_uncrossed(const MixedGraph& g, const TightFamilies& tight) {
  std::vector<const Subpartition*> all;
  for (const auto& p : tight.lower_tight) all.push_back(&p);
  for (const auto& p : tight.upper_tight) all.push_back(&p);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!crossing_edge_set(g, all[i]->support(), all[j]->support()).empty()) {
        return "edge between " + describe(g, *all[i]) + " and " + describe(g, *all[j]);
      }
    }
  }
  return {};
}

}  // namespace properties
