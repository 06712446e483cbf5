#include "arbopack/pieo.hpp"

#include <random>
#include <utility>

#include "arbopack/errors.hpp"

namespace arbopack {
namespace {

std::optional<std::pair<std::size_t, std::size_t>> first_crossing(const SetFamily& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (properly_intersecting(f[i], f[j])) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> all_crossings(const SetFamily& f) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (properly_intersecting(f[i], f[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

bool properly_intersecting(VertexSet x, VertexSet y) {
  return !(x & y).empty() && !(x - y).empty() && !(y - x).empty();
}

SetFamily pieo_step(const SetFamily& family, std::size_t i, std::size_t j, PieoType type) {
  if (i == j || i >= family.size() || j >= family.size()) {
    throw PreconditionError("invalid member indices for an elimination step");
  }
  const VertexSet x = family[i];
  const VertexSet y = family[j];
  if (!properly_intersecting(x, y)) throw PreconditionError("members are not properly intersecting");

  SetFamily out = family;
  switch (type) {
    case PieoType::union_and_intersection:
      out[i] = x | y;
      out[j] = x & y;
      return out;
    case PieoType::union_only:
      out[i] = x | y;
      break;
    case PieoType::intersection_only:
      out[i] = x & y;
      break;
  }
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
  return out;
}

bool is_laminar(const SetFamily& family) { return !first_crossing(family).has_value(); }

std::vector<bool> maximal_occurrences(const SetFamily& family) {
  std::vector<bool> maximal(family.size(), true);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size() && maximal[i]; ++j) {
      if (i == j) continue;
      const bool strictly_inside = family[i].is_subset_of(family[j]) && family[i] != family[j];
      const bool earlier_copy = j < i && family[i] == family[j];
      if (strictly_inside || earlier_copy) maximal[i] = false;
    }
  }
  return maximal;
}

bool properly_intersecting_pairs_are_maximal(const SetFamily& family) {
  // Equal copies never cross, so only strict containment matters here.
  for (auto [i, j] : all_crossings(family)) {
    for (std::size_t m = 0; m < family.size(); ++m) {
      for (std::size_t idx : {i, j}) {
        if (m != idx && family[idx].is_subset_of(family[m]) && family[idx] != family[m]) return false;
      }
    }
  }
  return true;
}

VertexSet family_union(const SetFamily& family) {
  VertexSet u;
  for (VertexSet x : family) u |= x;
  return u;
}

bool is_disjoint_family(const SetFamily& family) {
  VertexSet seen;
  for (VertexSet x : family) {
    if (x.empty() || seen.intersects(x)) return false;
    seen |= x;
  }
  return true;
}

LaminarizationTrace laminarize_type1(const SetFamily& first, const SetFamily& second,
                                     const LaminarizeOptions& options) {
  if (!is_disjoint_family(first) || !is_disjoint_family(second)) {
    throw PreconditionError("laminarization inputs must be families of disjoint nonempty sets");
  }
  LaminarizationTrace trace;
  trace.initial = first;
  trace.initial.insert(trace.initial.end(), second.begin(), second.end());

  std::mt19937_64 rng(options.seed);
  SetFamily current = trace.initial;
  if (options.observer) options.observer(current);
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    if (options.order == PairOrder::canonical) {
      pick = first_crossing(current);
    } else {
      auto pairs = all_crossings(current);
      if (!pairs.empty()) {
        std::uniform_int_distribution<std::size_t> dist(0, pairs.size() - 1);
        pick = pairs[dist(rng)];
      }
    }
    if (!pick) break;
    trace.steps.push_back({pick->first, pick->second, current[pick->first], current[pick->second]});
    current = pieo_step(current, pick->first, pick->second, PieoType::union_and_intersection);
    if (options.observer) options.observer(current);
  }

  trace.final = current;
  const auto maximal = maximal_occurrences(current);
  for (std::size_t i = 0; i < current.size(); ++i) {
    (maximal[i] ? trace.maximal : trace.remainder).push_back(current[i]);
  }
  return trace;
}

}  // namespace arbopack
