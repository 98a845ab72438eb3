#include "hyperfield/linsolve/pile.hpp"

#include <algorithm>

namespace hyperfield {

namespace {

// Kuhn-style augmenting path machinery on the equation/variable incidence
// graph. Equation adjacency lists keep ascending variable order so that the
// search, and with it the returned pile, is deterministic.
struct Matcher {
  std::vector<std::vector<int>> adj;  // equation -> variable ids
  std::vector<int> match_of_var;      // variable id -> equation position, -1 free
  std::vector<int> match_of_eq;       // equation position -> variable id, -1 free
  std::vector<bool> var_visited;

  explicit Matcher(const LinearSystem& s) {
    adj.resize(s.equations.size());
    for (std::size_t e = 0; e < s.equations.size(); ++e) {
      for (const Term& t : s.equations[e].terms) adj[e].push_back(t.var);
      std::sort(adj[e].begin(), adj[e].end());
    }
    match_of_var.assign(s.variables.size(), -1);
    match_of_eq.assign(s.equations.size(), -1);
  }

  bool try_augment(int e) {
    for (int v : adj[e]) {
      if (var_visited[v]) continue;
      var_visited[v] = true;
      if (match_of_var[v] == -1 || try_augment(match_of_var[v])) {
        match_of_var[v] = e;
        match_of_eq[e] = v;
        return true;
      }
    }
    return false;
  }

  // Augment treating `e`'s incidence as a fresh duplicate equation; on
  // failure the alternating-path reachability from the duplicate is left in
  // var_visited.
  bool try_augment_duplicate(int e) {
    for (int v : adj[e]) {
      if (var_visited[v]) continue;
      var_visited[v] = true;
      if (match_of_var[v] == -1 || try_augment(match_of_var[v])) {
        match_of_var[v] = e;  // never committed by the caller
        return true;
      }
    }
    return false;
  }

  void reset_visited() { var_visited.assign(match_of_var.size(), false); }
};

Pile pile_from_reachability(const Matcher& m) {
  Pile pile;
  for (std::size_t v = 0; v < m.var_visited.size(); ++v) {
    if (!m.var_visited[v]) continue;
    pile.variables.push_back(static_cast<int>(v));
    if (m.match_of_var[v] != -1) pile.equations.push_back(m.match_of_var[v]);
  }
  std::sort(pile.equations.begin(), pile.equations.end());
  pile.equations.erase(std::unique(pile.equations.begin(), pile.equations.end()), pile.equations.end());
  return pile;
}

}  // namespace

std::optional<Pile> find_pile(const LinearSystem& s) {
  if (s.equations.empty()) return std::nullopt;
  Matcher m(s);

  for (std::size_t e = 0; e < s.equations.size(); ++e) {
    m.reset_visited();
    if (!m.try_augment(static_cast<int>(e))) {
      // Hall violation: reachable equations outnumber their neighborhood.
      Pile pile = pile_from_reachability(m);
      pile.equations.push_back(static_cast<int>(e));
      std::sort(pile.equations.begin(), pile.equations.end());
      return pile;
    }
  }

  // Saturating matching exists; a pile remains iff duplicating some
  // equation's incidence breaks it.
  for (std::size_t e = 0; e < s.equations.size(); ++e) {
    // Probe on a copy of the matching so failed probes leave it intact.
    Matcher probe = m;
    probe.reset_visited();
    if (!probe.try_augment_duplicate(static_cast<int>(e))) {
      Pile pile = pile_from_reachability(probe);
      if (std::find(pile.equations.begin(), pile.equations.end(), static_cast<int>(e)) == pile.equations.end())
        pile.equations.push_back(static_cast<int>(e));
      std::sort(pile.equations.begin(), pile.equations.end());
      return pile;
    }
  }
  return std::nullopt;
}

}  // namespace hyperfield
