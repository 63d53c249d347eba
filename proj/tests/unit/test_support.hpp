#pragma once

// Brute-force helpers shared by the unit tests. Deliberately naive: nested
// recursion instead of the enumeration module, voter-by-voter counting
// instead of unit margins.

#include <functional>
#include <string>

#include "condorcet3/core.hpp"

namespace condorcet3::testing {

inline void for_each_profile_of_size(Count n, const std::function<void(const Profile&)>& fn) {
  std::array<Count, 6> counts{};
  std::function<void(int, Count)> rec = [&](int slot, Count left) {
    if (slot == 5) {
      counts[5] = left;
      fn(Profile(counts));
      return;
    }
    for (Count k = 0; k <= left; ++k) {
      counts[slot] = k;
      rec(slot + 1, left - k);
    }
  };
  rec(0, n);
}

inline void for_each_profile(Count lo, Count hi, const std::function<void(const Profile&)>& fn) {
  for (Count n = lo; n <= hi; ++n) for_each_profile_of_size(n, fn);
}

inline MarginGraph slow_margins(const Profile& p) {
  std::array<std::array<Count, 3>, 3> beats{};
  for (LinearOrder o : kOrders) {
    const std::string s = to_string(o);
    for (Count v = 0; v < p.count(o); ++v) {
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) ++beats[s[i] - 'a'][s[j] - 'a'];
      }
    }
  }
  return MarginGraph(beats[0][1] - beats[1][0], beats[0][2] - beats[2][0],
                     beats[1][2] - beats[2][1]);
}

inline bool has_zero_margin(const MarginGraph& g) {
  return g.ab() == 0 || g.ac() == 0 || g.bc() == 0;
}

}  // namespace condorcet3::testing
