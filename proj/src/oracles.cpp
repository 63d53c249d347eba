// Rules that coincide with maximin on three candidates, each implemented from
// its own general definition so they can serve as independent cross-checks.

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "condorcet3/rules.hpp"

namespace condorcet3 {

namespace {

struct Edge {
  Candidate from;
  Candidate to;
  Count weight;
};

std::vector<Edge> positive_edges(const MarginGraph& g) {
  std::vector<Edge> edges;
  for (Candidate x : kCandidates) {
    for (Candidate y : kCandidates) {
      if (g.m(x, y) > 0) edges.push_back({x, y, g.m(x, y)});
    }
  }
  return edges;
}

CandidateSet undefeated(const std::vector<Edge>& edges) {
  CandidateSet out = CandidateSet::all();
  for (const Edge& e : edges) out.erase(e.to);
  return out;
}

void check_bound(const Profile& p, const char* rule) {
  if (p.voters() > kDodgsonYoungVoterBound) {
    throw BoundExceeded(std::string(rule) + " is brute force and limited to " +
                        std::to_string(kDodgsonYoungVoterBound) + " voters");
  }
}

std::uint64_t pack(const std::array<Count, 6>& counts) {
  std::uint64_t key = 0;
  for (Count k : counts) key = key * 256 + static_cast<std::uint64_t>(k);
  return key;
}

}  // namespace

ChoiceSet split_cycle(const MarginGraph& g) {
  std::vector<Edge> edges = positive_edges(g);
  if (edges.size() == 3) {
    // Three positive edges on three vertices either form a cycle or are
    // transitive; a cycle gives every vertex in- and out-degree one.
    std::array<int, 3> out_degree{};
    for (const Edge& e : edges) ++out_degree[index(e.from)];
    if (out_degree == std::array<int, 3>{1, 1, 1}) {
      Count splitting = edges[0].weight;
      for (const Edge& e : edges) splitting = std::min(splitting, e.weight);
      std::erase_if(edges, [splitting](const Edge& e) { return e.weight <= splitting; });
    }
  }
  return ChoiceSet(undefeated(edges));
}

ChoiceSet beat_path(const MarginGraph& g) {
  std::array<std::array<Count, 3>, 3> strength{};
  for (const Edge& e : positive_edges(g)) strength[index(e.from)][index(e.to)] = e.weight;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j || i == k || j == k) continue;
        strength[i][j] = std::max(strength[i][j], std::min(strength[i][k], strength[k][j]));
      }
    }
  }
  CandidateSet out;
  for (int x = 0; x < 3; ++x) {
    bool wins = true;
    for (int y = 0; y < 3; ++y) {
      if (y != x && strength[x][y] < strength[y][x]) wins = false;
    }
    if (wins) out.insert(candidate_at(x));
  }
  return ChoiceSet(out);
}

ChoiceSet ranked_pairs(const MarginGraph& g) {
  std::vector<Edge> edges = positive_edges(g);
  std::vector<int> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  CandidateSet winners;
  // Every permutation that lists edges by non-increasing weight is one way of
  // breaking ties between equal margins.
  do {
    bool sorted = true;
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (edges[order[i - 1]].weight < edges[order[i]].weight) sorted = false;
    }
    if (!sorted) continue;
    std::array<std::array<bool, 3>, 3> reach{};
    std::vector<Edge> locked;
    for (int idx : order) {
      const Edge& e = edges[idx];
      if (reach[index(e.to)][index(e.from)]) continue;  // would close a cycle
      locked.push_back(e);
      reach[index(e.from)][index(e.to)] = true;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const bool via = (i == index(e.from) || reach[i][index(e.from)]) &&
                           (j == index(e.to) || reach[index(e.to)][j]);
          if (via && i != j) reach[i][j] = true;
        }
      }
    }
    winners = winners | undefeated(locked);
  } while (std::next_permutation(order.begin(), order.end()));
  return ChoiceSet(winners);
}

ChoiceSet kemeny(const MarginGraph& g) {
  std::array<Count, 6> agreement{};
  for (LinearOrder o : kOrders) {
    Count total = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) total += g.m(at_rank(o, i), at_rank(o, j));
    }
    agreement[index(o)] = total;
  }
  const Count best = *std::max_element(agreement.begin(), agreement.end());
  CandidateSet out;
  for (LinearOrder o : kOrders) {
    if (agreement[index(o)] == best) out.insert(top(o));
  }
  return ChoiceSet(out);
}

ChoiceSet dodgson(const Profile& p) {
  check_bound(p, "dodgson");
  // Breadth-first search over profiles reachable by adjacent swaps; the depth
  // at which x first becomes a Condorcet winner is its Dodgson score.
  std::array<Count, 3> score = {-1, -1, -1};
  int found = 0;
  std::unordered_map<std::uint64_t, Count> depth;
  std::deque<Profile> queue = {p};
  depth[pack(p.counts())] = 0;
  while (!queue.empty() && found < 3) {
    const Profile cur = queue.front();
    queue.pop_front();
    const Count d = depth[pack(cur.counts())];
    if (auto w = condorcet_winner(margins(cur)); w && score[index(*w)] < 0) {
      score[index(*w)] = d;
      ++found;
    }
    for (LinearOrder o : kOrders) {
      if (cur.count(o) == 0) continue;
      for (int upper = 0; upper < 2; ++upper) {
        Profile next = cur;
        next.remove(o).add(swap_adjacent(o, upper));
        if (depth.emplace(pack(next.counts()), d + 1).second) queue.push_back(next);
      }
    }
  }
  Count best = -1;
  for (Count s : score) {
    if (s >= 0 && (best < 0 || s < best)) best = s;
  }
  CandidateSet out;
  for (Candidate x : kCandidates) {
    if (score[index(x)] == best) out.insert(x);
  }
  return ChoiceSet(out);
}

ChoiceSet young(const Profile& p) {
  check_bound(p, "young");
  // Largest sub-multiset of voters in which x is the Condorcet winner.
  std::array<Count, 3> kept = {-1, -1, -1};
  std::array<Count, 6> sub{};
  while (true) {
    const Profile q(sub);
    if (!q.empty()) {
      if (auto w = condorcet_winner(margins(q))) {
        kept[index(*w)] = std::max(kept[index(*w)], q.voters());
      }
    }
    int i = 0;
    while (i < 6 && sub[i] == p.counts()[i]) sub[i++] = 0;
    if (i == 6) break;
    ++sub[i];
  }
  const Count best = *std::max_element(kept.begin(), kept.end());
  CandidateSet out;
  for (Candidate x : kCandidates) {
    if (kept[index(x)] == best) out.insert(x);
  }
  return ChoiceSet(out);
}

ChoiceSet maximin_equivalent(MaximinEquivalent variant, const Profile& p) {
  if (p.empty()) throw std::invalid_argument("rules need at least one voter");
  switch (variant) {
    case MaximinEquivalent::split_cycle: return split_cycle(margins(p));
    case MaximinEquivalent::beat_path: return beat_path(margins(p));
    case MaximinEquivalent::ranked_pairs: return ranked_pairs(margins(p));
    case MaximinEquivalent::kemeny: return kemeny(margins(p));
    case MaximinEquivalent::dodgson: return dodgson(p);
    case MaximinEquivalent::young: return young(p);
  }
  throw std::logic_error("unreachable");
}

}  // namespace condorcet3
