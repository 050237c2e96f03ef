#pragma once

// Closed labelings of arbitrary graphs: a pruned backtracking search and the
// exhaustive permutation oracle that validates it.

#include "closed_graph/closedness.hpp"
#include "closed_graph/errors.hpp"
#include "closed_graph/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace closed_graph {

inline constexpr std::size_t default_oracle_bound = 9;

/// Every permutation p with relabel(g, p) closed, in lexicographic order of p.
inline std::vector<Labeling> all_closed_labelings_bruteforce(const Graph &g,
                                                             std::size_t bound = default_oracle_bound) {
  if (g.order() > bound)
    throw OracleLimit(g.order(), bound);
  std::vector<Vertex> perm(g.order());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = static_cast<Vertex>(i + 1);
  std::vector<Labeling> out;
  do {
    Labeling lab(perm);
    if (is_closed_by_definition(relabel(g, lab)))
      out.push_back(std::move(lab));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Backtracking over label assignments 1, 2, ..., n. Each step gives the next
/// label to one unlabeled vertex, subject to
///   - the definitional triple condition on the labeled part (exact), and
///   - within each connected component, the relative order must keep every
///     upper neighborhood an interval that starts at the successor.
/// Candidates are tried in ascending vertex order.
class ClosedLabelingSearch {
public:
  explicit ClosedLabelingSearch(const Graph &g) : g_(g) {
    component_of_.resize(g.order() + 1);
    auto comps = connected_components(g);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (Vertex v : comps[c])
        component_of_[v] = c;
    component_count_ = comps.size();
  }

  /// Calls visit(labeling) for each closed labeling found, honouring
  /// fixed[v - 1] != 0 as a required label for v. Stops when visit returns
  /// false; returns false iff stopped early.
  template <class Visit> bool run(std::span<const Vertex> fixed, Visit &&visit) {
    const std::size_t n = g_.order();
    fixed_.assign(fixed.begin(), fixed.end());
    fixed_.resize(n, 0);
    vertex_for_label_.assign(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v)
      if (fixed_[v - 1] != 0) {
        Vertex l = fixed_[v - 1];
        if (l > n || vertex_for_label_[l] != 0)
          throw InvalidLabeling("fixed labels are not injective");
        vertex_for_label_[l] = v;
      }
    label_of_.assign(n + 1, 0);
    last_in_component_.assign(component_count_, 0);
    pending_.assign(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v)
      pending_[v] = g_.row(v).count();
    return extend(1, visit);
  }

  template <class Visit> bool run(Visit &&visit) {
    std::vector<Vertex> none;
    return run(none, std::forward<Visit>(visit));
  }

  /// First closed labeling honouring fixed, if any.
  std::optional<Labeling> first(std::span<const Vertex> fixed = {}) {
    std::optional<Labeling> found;
    run(fixed, [&](const Labeling &lab) {
      found = lab;
      return false;
    });
    return found;
  }

private:
  bool admissible(Vertex w) const {
    const auto &row_w = g_.row(w);
    std::size_t comp = component_of_[w];
    Vertex prev = last_in_component_[comp];
    if (prev != 0 && !row_w.test(prev))
      return false;
    bool ok = true;
    // Upper-interval condition: a labeled vertex of this component that still
    // waits for neighbors must receive w next.
    for (Vertex i = 1; i <= g_.order() && ok; ++i)
      if (label_of_[i] != 0 && component_of_[i] == comp && pending_[i] > 0 && !row_w.test(i))
        ok = false;
    if (!ok)
      return false;
    row_w.for_each([&](std::size_t x) {
      if (!ok || label_of_[x] == 0)
        return;
      const auto &row_x = g_.row(static_cast<Vertex>(x));
      // Upper neighbors of x labeled so far must be adjacent to w.
      row_x.for_each([&](std::size_t y) {
        if (ok && y != w && label_of_[y] > label_of_[x] && !row_w.test(y))
          ok = false;
      });
      // Labeled neighbors of w form its lower neighborhood, which must be complete.
      row_w.for_each([&](std::size_t y) {
        if (ok && y > x && label_of_[y] != 0 && !row_x.test(y))
          ok = false;
      });
    });
    return ok;
  }

  template <class Visit> bool extend(Vertex label, Visit &visit) {
    const std::size_t n = g_.order();
    if (label > n) {
      std::vector<Vertex> labels(label_of_.begin() + 1, label_of_.end());
      Labeling lab(std::move(labels));
      if (!is_closed_by_definition(relabel(g_, lab)))
        throw std::logic_error("labeling search produced a non-closed labeling");
      return visit(std::as_const(lab));
    }
    auto try_vertex = [&](Vertex w) {
      if (!admissible(w))
        return true;
      std::size_t comp = component_of_[w];
      Vertex saved = last_in_component_[comp];
      label_of_[w] = label;
      last_in_component_[comp] = w;
      g_.row(w).for_each([&](std::size_t x) { --pending_[x]; });
      bool keep_going = extend(label + 1, visit);
      g_.row(w).for_each([&](std::size_t x) { ++pending_[x]; });
      last_in_component_[comp] = saved;
      label_of_[w] = 0;
      return keep_going;
    };
    if (Vertex forced = vertex_for_label_[label]; forced != 0)
      return try_vertex(forced);
    for (Vertex w = 1; w <= n; ++w)
      if (label_of_[w] == 0 && fixed_[w - 1] == 0 && !try_vertex(w))
        return false;
    return true;
  }

  const Graph &g_;
  std::vector<std::size_t> component_of_;
  std::size_t component_count_ = 0;
  std::vector<Vertex> fixed_;
  std::vector<Vertex> vertex_for_label_;
  std::vector<Vertex> label_of_;
  std::vector<Vertex> last_in_component_;
  std::vector<std::size_t> pending_; // unlabeled neighbors per vertex
};

/// The lexicographically least closed labeling of g, if g is closed.
inline std::optional<Labeling> find_closed_labeling(const Graph &g) {
  ClosedLabelingSearch search(g);
  auto any = search.first();
  if (!any)
    return std::nullopt;
  const std::size_t n = g.order();
  std::vector<Vertex> fixed(n, 0);
  std::vector<bool> used(n + 1, false);
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex l = 1; l <= n; ++l) {
      if (used[l])
        continue;
      fixed[v - 1] = l;
      // The witness agrees with every label fixed so far.
      if (l == (*any)(v)) {
        used[l] = true;
        break;
      }
      if (auto witness = search.first(fixed)) {
        any = std::move(witness);
        used[l] = true;
        break;
      }
      fixed[v - 1] = 0;
    }
  }
  return Labeling(std::move(fixed));
}

/// g admits at least one closed labeling.
inline bool is_closed_graph(const Graph &g) { return ClosedLabelingSearch(g).first().has_value(); }

} // namespace closed_graph
