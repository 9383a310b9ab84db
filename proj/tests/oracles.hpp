#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "finkan/left_kan.hpp"

// Test-side oracles, written independently of the library's algorithms:
// unpruned enumeration where the library prunes, and repeated relabelling
// where the library uses union-find.
namespace oracle {

using namespace finkan;

inline std::map<std::string, std::map<std::string, std::string>> components_table(
    const NatTrans& t) {
  std::map<std::string, std::map<std::string, std::string>> out;
  const FinCategory& base = t.base();
  for (int c = 0; c < base.object_count(); ++c) {
    auto& table = out[base.object(c)];
    for (int e = 0; e < static_cast<int>(t.source().at(c).size()); ++e)
      table[t.source().at(c)[e]] = t.target().at(c)[t.component(c, e)];
  }
  return out;
}

inline std::string encode_components(
    const std::map<std::string, std::map<std::string, std::string>>& table) {
  return nlohmann::json(table).dump();
}

// Every natural transformation u -> v, by enumerating all component
// families outright and filtering with a direct naturality check. No
// pruning, no backtracking. Returns the canonical encodings, sorted.
inline std::vector<std::string> unpruned_nat_labels(const Presheaf& u, const Presheaf& v) {
  const FinCategory& base = u.base();
  int n = base.object_count();
  std::vector<std::vector<int>> comp(n);
  for (int c = 0; c < n; ++c) comp[c].assign(u.at(c).size(), 0);

  std::vector<std::string> found;
  auto natural = [&]() {
    for (int m = 0; m < base.morphism_count(); ++m) {
      int s = base.src(m), t = base.tgt(m);
      for (int e = 0; e < static_cast<int>(u.at(t).size()); ++e)
        if (v.action(m, comp[t][e]) != comp[s][u.action(m, e)]) return false;
    }
    return true;
  };
  auto record = [&]() {
    std::map<std::string, std::map<std::string, std::string>> table;
    for (int c = 0; c < n; ++c) {
      auto& entry = table[base.object(c)];
      for (int e = 0; e < static_cast<int>(u.at(c).size()); ++e)
        entry[u.at(c)[e]] = v.at(c)[comp[c][e]];
    }
    found.push_back(encode_components(table));
  };

  // Odometer over all assignments of all objects at once.
  int total = 0;
  for (int c = 0; c < n; ++c) total += static_cast<int>(u.at(c).size());
  std::vector<std::pair<int, int>> slots;  // (object, element)
  for (int c = 0; c < n; ++c)
    for (int e = 0; e < static_cast<int>(u.at(c).size()); ++e) slots.push_back({c, e});
  for (int c = 0; c < n; ++c)
    if (!u.at(c).empty() && v.at(c).empty()) return {};  // no maps at all

  std::vector<int> digits(total, 0);
  while (true) {
    for (int i = 0; i < total; ++i) comp[slots[i].first][slots[i].second] = digits[i];
    if (natural()) record();
    int i = total - 1;
    while (i >= 0) {
      int limit = static_cast<int>(v.at(slots[i].first).size());
      if (++digits[i] < limit) break;
      digits[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

// The partition of the tensor product's pairs by the generated relation,
// computed by repeated relabelling until a fixpoint (deliberately not
// union-find). Classes are sorted by least member.
inline std::vector<std::vector<int>> naive_tensor_partition(const TensorProduct& t) {
  const Presheaf& v = t.left();
  const Presheaf& w = t.right();
  const FinCategory& base = v.base();

  int n = t.pair_count();
  std::vector<int> group(n);
  for (int i = 0; i < n; ++i) group[i] = i;

  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < base.morphism_count(); ++a) {
      int c = base.src(a), cp = base.tgt(a);
      for (int p = 0; p < static_cast<int>(v.at(cp).size()); ++p) {
        for (int q = 0; q < static_cast<int>(w.at(c).size()); ++q) {
          int i = t.pair_index(c, v.action(a, p), q);
          int j = t.pair_index(cp, p, w.action(a, q));
          int lo = std::min(group[i], group[j]);
          int hi = std::max(group[i], group[j]);
          if (lo == hi) continue;
          for (int k = 0; k < n; ++k)
            if (group[k] == hi) group[k] = lo;
          changed = true;
        }
      }
    }
  }

  std::map<int, std::vector<int>> by_group;
  for (int i = 0; i < n; ++i) by_group[group[i]].push_back(i);
  std::vector<std::vector<int>> classes;
  for (auto& [g, members] : by_group) {
    (void)g;
    std::sort(members.begin(), members.end());
    classes.push_back(members);
  }
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<int>& l, const std::vector<int>& r) { return l[0] < r[0]; });
  return classes;
}

}  // namespace oracle
