#include "cliquecolor/mixed_join.hpp"

#include <algorithm>
#include <optional>

#include "cliquecolor/constructions.hpp"
#include "cliquecolor/errors.hpp"

namespace cliquecolor {

namespace {

int complete_part_size(MixedKind kind) { return kind == MixedKind::K4E2 ? 4 : 3; }

bool list_has(const std::vector<int>& list, int c) {
  return std::find(list.begin(), list.end(), c) != list.end();
}

// Greedy completion after the non-adjacent pair got a shared color: color the
// complete part in ascending order leaving `w` for last. Every vertex is
// adjacent to every other, so "colors used so far" is the only constraint.
std::optional<Coloring> direct_route(const Graph& host, const ListAssignment& lists,
                                     int k, int w) {
  const int x = k;
  const int y = k + 1;
  for (int shared : lists[static_cast<std::size_t>(x)]) {
    if (!list_has(lists[static_cast<std::size_t>(y)], shared)) continue;
    std::vector<int> color(static_cast<std::size_t>(host.size()), -1);
    color[static_cast<std::size_t>(x)] = shared;
    color[static_cast<std::size_t>(y)] = shared;
    std::vector<int> order;
    for (int v = 0; v < k; ++v)
      if (v != w) order.push_back(v);
    order.push_back(w);
    bool ok = true;
    for (int v : order) {
      int picked = -1;
      for (int c : lists[static_cast<std::size_t>(v)]) {
        bool clash = false;
        for (int u = 0; u < host.size() && !clash; ++u)
          if (color[static_cast<std::size_t>(u)] == c && host.adjacent(u, v)) clash = true;
        if (!clash) {
          picked = c;
          break;
        }
      }
      if (picked < 0) {
        ok = false;
        break;
      }
      color[static_cast<std::size_t>(v)] = picked;
    }
    if (!ok) continue;
    int palette = 0;
    for (int c : color) palette = std::max(palette, c + 1);
    return Coloring{color, palette};
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(MixedKind kind) {
  return kind == MixedKind::K4E2 ? "K4E2" : "K3E2";
}

Graph mixed_join_host(MixedKind kind) {
  const int k = complete_part_size(kind);
  return join(complete_graph(k), edgeless_graph(2));
}

Coloring color_mixed_join(MixedKind kind, const ListAssignment& lists) {
  const Graph host = mixed_join_host(kind);
  const int n = host.size();
  const int k = complete_part_size(kind);
  if (static_cast<int>(lists.size()) != n)
    throw contract_error("color_mixed_join: assignment must cover the host");
  for (int v = 0; v < n; ++v)
    if (static_cast<int>(lists[static_cast<std::size_t>(v)].size()) < host.degree(v) - 1)
      throw contract_error("color_mixed_join: every list needs at least degree-1 colors");
  int w = -1;
  for (int v = 0; v < k && w < 0; ++v)
    if (static_cast<int>(lists[static_cast<std::size_t>(v)].size()) >= host.degree(v)) w = v;
  if (w < 0)
    throw contract_error("color_mixed_join: some complete-part vertex needs a full list");
  if (kind == MixedKind::K3E2) {
    bool has_full_pair_vertex = false;
    for (int v = k; v < n; ++v)
      if (static_cast<int>(lists[static_cast<std::size_t>(v)].size()) >= host.degree(v))
        has_full_pair_vertex = true;
    if (!has_full_pair_vertex)
      throw contract_error("color_mixed_join: one non-adjacent vertex needs a full list");
  }

  std::optional<Coloring> result = direct_route(host, lists, k, w);
  if (!result) result = l_colorable(host, lists);
  if (!result)
    throw invariant_error("color_mixed_join: no coloring found under a valid contract");
  for (int v = 0; v < n; ++v)
    if (!list_has(lists[static_cast<std::size_t>(v)], result->color[static_cast<std::size_t>(v)]))
      throw invariant_error("color_mixed_join: produced an off-list color");
  if (!verify_coloring(host, *result))
    throw invariant_error("color_mixed_join: produced an improper coloring");
  return *result;
}

ListAssignment random_mixed_join_lists(MixedKind kind, Rng& rng) {
  const Graph host = mixed_join_host(kind);
  const int n = host.size();
  const int k = complete_part_size(kind);
  const int universe = rng.range(5, 9);
  const int full_complete = rng.range(0, k - 1);
  const int full_pair = kind == MixedKind::K3E2 ? rng.range(k, n - 1) : -1;

  ListAssignment lists(static_cast<std::size_t>(n));
  std::vector<int> palette(static_cast<std::size_t>(universe));
  for (int c = 0; c < universe; ++c) palette[static_cast<std::size_t>(c)] = c;
  for (int v = 0; v < n; ++v) {
    int size = host.degree(v) - 1;
    if (v == full_complete || v == full_pair) ++size;
    if (size < universe && rng.chance(0.25)) ++size;
    std::vector<int> colors = palette;
    rng.shuffle(colors);
    colors.resize(static_cast<std::size_t>(size));
    std::sort(colors.begin(), colors.end());
    lists[static_cast<std::size_t>(v)] = std::move(colors);
  }
  return lists;
}

}  // namespace cliquecolor
