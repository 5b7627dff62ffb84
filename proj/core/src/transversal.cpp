#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "cliquecolor/errors.hpp"
#include "cliquecolor/oracles.hpp"
#include "cliquecolor/transversal.hpp"

namespace cliquecolor {

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::string describe_cliques(const std::vector<std::vector<int>>& cliques,
                             std::initializer_list<int> which) {
  std::ostringstream os;
  for (int idx : which) {
    os << " {";
    const std::vector<int>& c = cliques[static_cast<std::size_t>(idx)];
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "}";
  }
  return os.str();
}

}  // namespace

DiPartition di_partition(const Graph& g,
                         const std::vector<std::vector<int>>& cliques) {
  const int delta = g.max_degree();
  for (const std::vector<int>& c : cliques)
    if (static_cast<int>(c.size()) != delta - 4)
      throw contract_error(
          "di_partition: expected maximum cliques of size max degree minus "
          "four");

  const int m = static_cast<int>(cliques.size());
  std::vector<int> partner(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const std::size_t overlap =
          intersect_sorted(cliques[static_cast<std::size_t>(i)],
                           cliques[static_cast<std::size_t>(j)])
              .size();
      if (overlap == 0) continue;
      if (static_cast<int>(overlap) != delta - 5)
        throw structural_error(
            "maximum cliques overlap in " + std::to_string(overlap) +
            " vertices, expected " + std::to_string(delta - 5) + ":" +
            describe_cliques(cliques, {i, j}));
      if (partner[static_cast<std::size_t>(i)] >= 0)
        throw structural_error(
            "maximum clique intersects two others:" +
            describe_cliques(cliques, {partner[static_cast<std::size_t>(i)], i,
                                       j}));
      if (partner[static_cast<std::size_t>(j)] >= 0)
        throw structural_error(
            "maximum clique intersects two others:" +
            describe_cliques(cliques, {partner[static_cast<std::size_t>(j)], j,
                                       i}));
      partner[static_cast<std::size_t>(i)] = j;
      partner[static_cast<std::size_t>(j)] = i;
    }

  DiPartition out;
  for (int i = 0; i < m; ++i) {
    const int p = partner[static_cast<std::size_t>(i)];
    if (p >= 0 && p < i) continue;  // handled with its partner
    DiGroup grp;
    grp.clique = cliques[static_cast<std::size_t>(i)];
    if (p >= 0) {
      std::vector<int> extra;
      std::set_difference(cliques[static_cast<std::size_t>(p)].begin(),
                          cliques[static_cast<std::size_t>(p)].end(),
                          grp.clique.begin(), grp.clique.end(),
                          std::back_inserter(extra));
      if (extra.size() != 1)
        throw structural_error("overlapping pair has the wrong shape:" +
                               describe_cliques(cliques, {i, p}));
      grp.x = extra.front();
      int adj = 0;
      for (int v : grp.clique)
        if (g.adjacent(grp.x, v)) ++adj;
      if (adj != static_cast<int>(grp.clique.size()) - 1)
        throw structural_error(
            "attached vertex " + std::to_string(grp.x) + " is adjacent to " +
            std::to_string(adj) + " clique vertices, expected all but one:" +
            describe_cliques(cliques, {i, p}));
    }
    out.groups.push_back(std::move(grp));
  }

  std::set<int> seen;
  for (const DiGroup& grp : out.groups) {
    for (int v : grp.clique)
      if (!seen.insert(v).second)
        throw structural_error("clique groups are not vertex-disjoint at " +
                               std::to_string(v));
    if (grp.x >= 0 && !seen.insert(grp.x).second)
      throw structural_error("clique groups are not vertex-disjoint at " +
                             std::to_string(grp.x));
  }
  return out;
}

TransversalInstance build_transversal_instance(const Graph& g,
                                               const DiPartition& d, int s) {
  std::vector<std::vector<int>> kparts;
  for (const DiGroup& grp : d.groups) {
    if (grp.x < 0) {
      kparts.push_back(grp.clique);
    } else {
      std::vector<int> ki;
      for (int v : grp.clique)
        if (g.adjacent(v, grp.x)) ki.push_back(v);
      kparts.push_back(std::move(ki));
    }
  }

  std::vector<int> all;
  for (const std::vector<int>& k : kparts) all.insert(all.end(), k.begin(), k.end());
  std::sort(all.begin(), all.end());

  InducedSubgraph sub = induced_subgraph(g, all);
  auto aux_index = [&](int parent) {
    return static_cast<int>(std::lower_bound(all.begin(), all.end(), parent) -
                            all.begin());
  };

  TransversalInstance t;
  t.to_parent = sub.to_parent;
  t.s = s;
  for (const std::vector<int>& k : kparts) {
    std::vector<int> part;
    for (int v : k) part.push_back(aux_index(v));
    std::sort(part.begin(), part.end());
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (sub.graph.adjacent(part[i], part[j]))
          sub.graph.remove_edge(part[i], part[j]);
    t.parts.push_back(std::move(part));
  }
  t.aux_graph = std::move(sub.graph);

  t.lopsided = true;
  for (const std::vector<int>& part : t.parts) {
    const int bound =
        std::min(s, static_cast<int>(part.size()) - s);
    for (int v : part)
      if (t.aux_graph.degree(v) > bound) t.lopsided = false;
  }
  return t;
}

namespace {

std::optional<std::vector<int>> to_parent_order(
    const TransversalInstance& t, const std::vector<int>& chosen) {
  std::vector<int> out;
  for (int v : chosen)
    out.push_back(t.to_parent[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace

std::optional<std::vector<int>> find_independent_transversal(
    const TransversalInstance& t) {
  const int r = static_cast<int>(t.parts.size());
  std::vector<int> chosen(static_cast<std::size_t>(r), -1);
  std::vector<char> done(static_cast<std::size_t>(r), 0);
  const Graph& f = t.aux_graph;

  auto compatible = [&](int v) {
    for (int p = 0; p < r; ++p)
      if (chosen[static_cast<std::size_t>(p)] >= 0 &&
          f.adjacent(v, chosen[static_cast<std::size_t>(p)]))
        return false;
    return true;
  };

  std::function<bool()> search = [&]() -> bool {
    int best = -1;
    int best_count = std::numeric_limits<int>::max();
    for (int p = 0; p < r; ++p) {
      if (done[static_cast<std::size_t>(p)]) continue;
      int count = 0;
      for (int v : t.parts[static_cast<std::size_t>(p)])
        if (compatible(v)) ++count;
      if (count < best_count) {
        best = p;
        best_count = count;
      }
    }
    if (best < 0) return true;
    if (best_count == 0) return false;
    done[static_cast<std::size_t>(best)] = 1;
    for (int v : t.parts[static_cast<std::size_t>(best)]) {
      if (!compatible(v)) continue;
      chosen[static_cast<std::size_t>(best)] = v;
      if (search()) return true;
    }
    chosen[static_cast<std::size_t>(best)] = -1;
    done[static_cast<std::size_t>(best)] = 0;
    return false;
  };

  if (!search()) {
    if (t.lopsided)
      throw invariant_error(
          "no independent transversal although the lopsided hypothesis "
          "holds");
    return std::nullopt;
  }
  return to_parent_order(t, chosen);
}

std::optional<std::vector<int>> enumerate_transversal(
    const TransversalInstance& t) {
  const int r = static_cast<int>(t.parts.size());
  for (const std::vector<int>& part : t.parts)
    if (part.empty()) return std::nullopt;
  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  const Graph& f = t.aux_graph;
  for (;;) {
    bool ok = true;
    for (int a = 0; a < r && ok; ++a)
      for (int b = a + 1; b < r && ok; ++b)
        if (f.adjacent(
                t.parts[static_cast<std::size_t>(a)][idx[static_cast<std::size_t>(a)]],
                t.parts[static_cast<std::size_t>(b)][idx[static_cast<std::size_t>(b)]]))
          ok = false;
    if (ok) {
      std::vector<int> chosen;
      for (int p = 0; p < r; ++p)
        chosen.push_back(
            t.parts[static_cast<std::size_t>(p)][idx[static_cast<std::size_t>(p)]]);
      return to_parent_order(t, chosen);
    }
    int p = r - 1;
    while (p >= 0) {
      if (++idx[static_cast<std::size_t>(p)] <
          t.parts[static_cast<std::size_t>(p)].size())
        break;
      idx[static_cast<std::size_t>(p)] = 0;
      --p;
    }
    if (p < 0) return std::nullopt;
  }
}

std::optional<std::vector<int>> hitting_set(const Graph& g) {
  const int delta = g.max_degree();
  std::vector<std::vector<int>> cliques = maximum_cliques(g);
  if (cliques.empty()) return std::vector<int>{};
  if (static_cast<int>(cliques.front().size()) != delta - 4)
    return std::nullopt;  // outside the guaranteed regime

  DiPartition d = di_partition(g, cliques);
  TransversalInstance t = build_transversal_instance(g, d, delta / 2 - 2);
  std::optional<std::vector<int>> found = find_independent_transversal(t);
  if (!found) return std::nullopt;

  std::vector<int> hit = *found;
  std::sort(hit.begin(), hit.end());
  for (std::size_t i = 0; i < hit.size(); ++i)
    for (std::size_t j = i + 1; j < hit.size(); ++j)
      if (g.adjacent(hit[i], hit[j]))
        throw invariant_error("hitting set is not independent");
  for (const std::vector<int>& c : cliques) {
    bool covered = false;
    for (int v : hit)
      if (std::binary_search(c.begin(), c.end(), v)) covered = true;
    if (!covered)
      throw invariant_error("hitting set misses a maximum clique");
  }
  return hit;
}

}  // namespace cliquecolor
