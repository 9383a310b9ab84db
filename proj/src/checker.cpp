#include "finkan/checker.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"

namespace finkan {

namespace {

// Deterministic, platform-independent generator (splitmix64). The standard
// distributions are implementation-defined, so reduction is done by hand.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  int below(int n) {
    if (n <= 0) return 0;
    return static_cast<int>(next() % static_cast<std::uint64_t>(n));
  }

  bool coin() { return (next() & 1) != 0; }
};

std::string join_path(const std::vector<int>& edges) {
  std::string label;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) label += '.';
    label += "e" + std::to_string(edges[i]);
  }
  return label;
}

// Assembles a CategoryData from objects, identity labels and the
// non-identity morphisms, with composition of non-identity pairs delegated
// to `comp`. Identity composites are filled in mechanically.
CategoryData assemble_category(const std::vector<std::string>& objects,
                               const std::vector<MorRecord>& nonid,
                               const std::function<std::string(const MorRecord&,
                                                               const MorRecord&)>& comp) {
  CategoryData data;
  data.objects = objects;
  std::vector<MorRecord> all;
  for (const auto& obj : objects) {
    MorRecord id{"id_" + obj, obj, obj};
    data.identity[obj] = id.id;
    all.push_back(id);
  }
  std::set<std::string> identity_labels;
  for (const auto& m : all) identity_labels.insert(m.id);
  all.insert(all.end(), nonid.begin(), nonid.end());
  data.morphisms = all;
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.tgt != b.src) continue;
      std::string value;
      if (identity_labels.count(a.id)) value = b.id;
      else if (identity_labels.count(b.id)) value = a.id;
      else value = comp(a, b);
      data.compose[{a.id, b.id}] = value;
    }
  return data;
}

}  // namespace

FinCategory terminal_category() {
  CategoryData data;
  data.objects = {"*"};
  data.morphisms = {{"id*", "*", "*"}};
  data.identity["*"] = "id*";
  data.compose[{"id*", "id*"}] = "id*";
  return validate_category(data);
}

FinFunctor functor_to_terminal(const FinCategory& c) {
  FinCategory one = terminal_category();
  std::vector<int> obj_map(c.object_count(), 0);
  std::vector<int> mor_map(c.morphism_count(), 0);
  return FinFunctor::from_parts(c, one, std::move(obj_map), std::move(mor_map), Check::checked);
}

FinCategory gen_category(const GenBounds& bounds) {
  Rng rng(bounds.seed);
  const int max_obj = std::max(1, bounds.max_objects);
  const int max_mor = std::max(max_obj, bounds.max_morphisms);
  const int n = 1 + rng.below(std::min(max_obj, max_mor));

  std::vector<std::string> objects;
  for (int i = 0; i < n; ++i) objects.push_back("o" + std::to_string(i));

  const bool collapse_mode = rng.below(4) == 0;
  std::vector<std::pair<int, int>> edges;  // (src object, tgt object)

  if (!collapse_mode) {
    // Acyclic mode: edges go forward along a random order; the morphisms
    // are all nonempty edge paths, so budget = identities + path count.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

    auto count_paths = [&]() {
      // Paths are generated by DFS; counts stay tiny because of the budget.
      int count = 0;
      std::function<void(int)> extend = [&](int at) {
        for (const auto& [s, t] : edges)
          if (s == at && count <= max_mor) {
            ++count;
            extend(t);
          }
      };
      for (int c = 0; c < n; ++c) extend(c);
      return count;
    };

    for (int attempt = 0; attempt < 4 * max_mor; ++attempt) {
      if (n < 2) break;
      int i = rng.below(n), j = rng.below(n);
      if (i == j) continue;
      edges.emplace_back(order[std::min(i, j)], order[std::max(i, j)]);
      if (n + count_paths() > max_mor) edges.pop_back();
    }

    std::vector<MorRecord> paths;
    std::function<void(std::vector<int>&)> emit = [&](std::vector<int>& stack) {
      int at = edges[stack.back()].second;
      paths.push_back({join_path(stack), objects[edges[stack.front()].first], objects[at]});
      for (size_t e = 0; e < edges.size(); ++e)
        if (edges[e].first == at) {
          stack.push_back(static_cast<int>(e));
          emit(stack);
          stack.pop_back();
        }
    };
    for (size_t e = 0; e < edges.size(); ++e) {
      std::vector<int> stack{static_cast<int>(e)};
      if (edges[e].first >= 0) emit(stack);
    }

    auto comp = [](const MorRecord& a, const MorRecord& b) { return a.id + "." + b.id; };
    return validate_category(assemble_category(objects, paths, comp));
  }

  // Collapse mode: arbitrary edges (loops allowed), kept paths of length at
  // most two, and absorbing sink morphisms soaking up longer composites.
  struct PathInfo {
    int src, tgt, len;
  };
  std::vector<MorRecord> nonid;
  std::map<std::string, PathInfo> info;
  std::set<std::pair<int, int>> sinks;

  auto rebuild = [&]() {
    nonid.clear();
    info.clear();
    sinks.clear();
    for (size_t e = 0; e < edges.size(); ++e) {
      std::string label = "e" + std::to_string(e);
      nonid.push_back({label, objects[edges[e].first], objects[edges[e].second]});
      info[label] = {edges[e].first, edges[e].second, 1};
    }
    for (size_t e = 0; e < edges.size(); ++e)
      for (size_t g = 0; g < edges.size(); ++g)
        if (edges[e].second == edges[g].first) {
          std::string label = "e" + std::to_string(e) + ".e" + std::to_string(g);
          nonid.push_back({label, objects[edges[e].first], objects[edges[g].second]});
          info[label] = {edges[e].first, edges[g].second, 2};
        }
    // Sink closure: start from overflowing path composites, then absorb
    // path pre/post-composition and sink-sink composition.
    for (const auto& [pl, p] : info)
      for (const auto& [ql, q] : info)
        if (p.tgt == q.src && p.len + q.len > 2) sinks.insert({p.src, q.tgt});
    bool grew = true;
    while (grew) {
      grew = false;
      std::set<std::pair<int, int>> next = sinks;
      for (const auto& [x, y] : sinks) {
        for (const auto& [pl, p] : info) {
          if (p.tgt == x) next.insert({p.src, y});
          if (p.src == y) next.insert({x, p.tgt});
        }
        for (const auto& [x2, y2] : sinks)
          if (y == x2) next.insert({x, y2});
      }
      if (next.size() != sinks.size()) {
        sinks = std::move(next);
        grew = true;
      }
    }
  };

  int budget_edges = rng.below(max_mor) + 1;
  for (int attempt = 0; attempt < budget_edges; ++attempt) {
    edges.emplace_back(rng.below(n), rng.below(n));
    rebuild();
    if (n + static_cast<int>(info.size() + sinks.size()) > max_mor) {
      edges.pop_back();
      rebuild();
    }
  }

  std::vector<MorRecord> all = nonid;
  for (const auto& [x, y] : sinks)
    all.push_back({"s_" + objects[x] + "_" + objects[y], objects[x], objects[y]});

  auto comp = [&](const MorRecord& a, const MorRecord& b) -> std::string {
    auto pa = info.find(a.id);
    auto pb = info.find(b.id);
    if (pa != info.end() && pb != info.end() && pa->second.len + pb->second.len <= 2)
      return a.id + "." + b.id;
    return "s_" + a.src + "_" + b.tgt;
  };
  return validate_category(assemble_category(objects, all, comp));
}

Presheaf gen_presheaf(const GenBounds& bounds, const FinCategory& base) {
  Rng rng(bounds.seed);
  const int max_e = std::max(1, bounds.max_elements);
  const int n_obj = base.object_count();
  const int roll = n_obj == 0 ? 0 : rng.below(10);

  if (roll == 0) return constant_presheaf(base, {});
  if (roll == 1) return constant_presheaf(base, {"k0"});
  if (roll == 2) {
    std::vector<std::string> labels;
    for (int k = 0, count = 1 + rng.below(max_e); k < count; ++k)
      labels.push_back("k" + std::to_string(k));
    return constant_presheaf(base, labels);
  }

  // A random coproduct of representables, then a random batch of
  // identifications closed up to a congruence. Every finite presheaf is a
  // colimit of representables, so nothing is out of reach of this scheme.
  std::vector<int> apex;
  std::vector<int> count(n_obj, 0);
  for (int tries = 0; tries < 3; ++tries) {
    int x = rng.below(n_obj);
    bool fits = true;
    for (int c = 0; c < n_obj; ++c)
      if (count[c] + static_cast<int>(base.hom(c, x).size()) > max_e) fits = false;
    if (!fits) continue;
    apex.push_back(x);
    for (int c = 0; c < n_obj; ++c) count[c] += static_cast<int>(base.hom(c, x).size());
  }
  if (apex.empty()) return constant_presheaf(base, {"k0"});

  std::vector<std::vector<std::string>> elements(n_obj);
  std::vector<std::vector<int>> action(base.morphism_count());
  // Element (i, b) over c encodes morphism b : c -> apex[i] in summand i.
  std::vector<std::vector<std::pair<int, int>>> elems(n_obj);
  for (int c = 0; c < n_obj; ++c)
    for (size_t i = 0; i < apex.size(); ++i)
      for (int b : base.hom(c, apex[i])) elems[c].push_back({static_cast<int>(i), b});
  auto position = [&](int c, int i, int b) {
    auto it = std::find(elems[c].begin(), elems[c].end(), std::make_pair(i, b));
    return static_cast<int>(it - elems[c].begin());
  };
  for (int c = 0; c < n_obj; ++c)
    for (const auto& [i, b] : elems[c])
      elements[c].push_back("y" + std::to_string(i) + "_" + base.morphism(b));
  for (int a = 0; a < base.morphism_count(); ++a) {
    const int ct = base.tgt(a);
    for (const auto& [i, b] : elems[ct])
      action[a].push_back(position(base.src(a), i, base.compose(a, b)));
  }

  // Random identifications, closed to a congruence.
  std::vector<std::vector<int>> parent(n_obj);
  for (int c = 0; c < n_obj; ++c) {
    parent[c].resize(elems[c].size());
    std::iota(parent[c].begin(), parent[c].end(), 0);
  }
  auto find = [&](int c, int e) {
    while (parent[c][e] != e) {
      parent[c][e] = parent[c][parent[c][e]];
      e = parent[c][e];
    }
    return e;
  };
  auto unite = [&](int c, int e1, int e2) {
    int r1 = find(c, e1), r2 = find(c, e2);
    if (r1 != r2) parent[c][std::max(r1, r2)] = std::min(r1, r2);
    return r1 != r2;
  };
  for (int k = rng.below(3); k > 0; --k) {
    std::vector<int> candidates;
    for (int c = 0; c < n_obj; ++c)
      if (elems[c].size() >= 2) candidates.push_back(c);
    if (candidates.empty()) break;
    int c = candidates[rng.below(static_cast<int>(candidates.size()))];
    unite(c, rng.below(static_cast<int>(elems[c].size())),
          rng.below(static_cast<int>(elems[c].size())));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < base.morphism_count(); ++a) {
      const int ct = base.tgt(a), cs = base.src(a);
      for (size_t e1 = 0; e1 < elems[ct].size(); ++e1)
        for (size_t e2 = e1 + 1; e2 < elems[ct].size(); ++e2)
          if (find(ct, static_cast<int>(e1)) == find(ct, static_cast<int>(e2)))
            changed |= unite(cs, action[a][e1], action[a][e2]);
    }
  }

  // Quotient: keep the least element of each class; the class label is the
  // least member label, which is the root's own label since element order
  // is label order.
  std::vector<std::vector<std::string>> q_elements(n_obj);
  std::vector<std::vector<int>> q_index(n_obj);
  for (int c = 0; c < n_obj; ++c) {
    q_index[c].assign(elems[c].size(), -1);
    for (size_t e = 0; e < elems[c].size(); ++e)
      if (find(c, static_cast<int>(e)) == static_cast<int>(e)) {
        q_index[c][e] = static_cast<int>(q_elements[c].size());
        q_elements[c].push_back(elements[c][e]);
      }
  }
  std::vector<std::vector<int>> q_action(base.morphism_count());
  for (int a = 0; a < base.morphism_count(); ++a) {
    const int ct = base.tgt(a), cs = base.src(a);
    for (size_t e = 0; e < elems[ct].size(); ++e)
      if (q_index[ct][e] >= 0)
        q_action[a].push_back(q_index[cs][find(cs, action[a][e])]);
  }
  return Presheaf::from_parts(base, std::move(q_elements), std::move(q_action), Check::checked);
}

FinFunctor gen_functor(const GenBounds& bounds, const FinCategory& source,
                       const FinCategory& target) {
  if (source.object_count() == 0)
    return FinFunctor::from_parts(source, target, {}, {}, Check::checked);
  if (target.object_count() == 0)
    throw Error(Error::Code::generation_exhausted,
                "no functor into an empty category from a nonempty one");
  Rng rng(bounds.seed);

  const int nm = source.morphism_count();
  std::vector<char> reducible(nm, 0);
  for (int p = 0; p < nm; ++p)
    for (int q = 0; q < nm; ++q) {
      if (source.is_identity(p) || source.is_identity(q)) continue;
      int pq = source.compose(p, q);
      if (pq >= 0) reducible[pq] = 1;
    }

  for (int attempt = 0; attempt < 25; ++attempt) {
    std::vector<int> obj_map(source.object_count());
    for (auto& img : obj_map) img = rng.below(target.object_count());
    std::vector<int> mor_map(nm, -1);
    for (int c = 0; c < source.object_count(); ++c)
      mor_map[source.identity(c)] = target.identity(obj_map[c]);

    bool dead = false;
    for (int m = 0; m < nm && !dead; ++m) {
      if (mor_map[m] >= 0 || reducible[m]) continue;
      auto candidates = target.hom(obj_map[source.src(m)], obj_map[source.tgt(m)]);
      if (candidates.empty()) dead = true;
      else mor_map[m] = candidates[rng.below(static_cast<int>(candidates.size()))];
    }
    if (dead) continue;

    bool progress = true;
    while (progress) {
      progress = false;
      for (int p = 0; p < nm; ++p)
        for (int q = 0; q < nm; ++q) {
          if (source.is_identity(p) || source.is_identity(q)) continue;
          int pq = source.compose(p, q);
          if (pq < 0 || mor_map[pq] >= 0 || mor_map[p] < 0 || mor_map[q] < 0) continue;
          mor_map[pq] = target.compose(mor_map[p], mor_map[q]);
          progress = true;
        }
    }
    if (std::find(mor_map.begin(), mor_map.end(), -1) != mor_map.end()) continue;

    try {
      return FinFunctor::from_parts(source, target, std::move(obj_map), std::move(mor_map),
                                    Check::checked);
    } catch (const Error&) {
      continue;  // conflicting factorizations; retry with fresh choices
    }
  }

  // Constant functor fallback: always lawful.
  int d = rng.below(target.object_count());
  std::vector<int> obj_map(source.object_count(), d);
  std::vector<int> mor_map(nm, target.identity(d));
  return FinFunctor::from_parts(source, target, std::move(obj_map), std::move(mor_map),
                                Check::checked);
}

FinFunctor gen_full_subcategory_inclusion(const GenBounds& bounds, const FinCategory& target) {
  if (target.object_count() == 0)
    throw Error(Error::Code::generation_exhausted, "cannot include into an empty category");
  Rng rng(bounds.seed);
  std::vector<char> keep(target.object_count(), 0);
  for (auto& k : keep) k = rng.coin() ? 1 : 0;
  if (std::find(keep.begin(), keep.end(), 1) == keep.end())
    keep[rng.below(target.object_count())] = 1;

  CategoryData data;
  FunctorData fdata;
  for (int c = 0; c < target.object_count(); ++c)
    if (keep[c]) {
      data.objects.push_back(target.object(c));
      data.identity[target.object(c)] = target.morphism(target.identity(c));
      fdata.obj_map[target.object(c)] = target.object(c);
    }
  std::vector<int> kept_mors;
  for (int m = 0; m < target.morphism_count(); ++m)
    if (keep[target.src(m)] && keep[target.tgt(m)]) {
      data.morphisms.push_back(
          {target.morphism(m), target.object(target.src(m)), target.object(target.tgt(m))});
      fdata.mor_map[target.morphism(m)] = target.morphism(m);
      kept_mors.push_back(m);
    }
  for (int a : kept_mors)
    for (int b : kept_mors)
      if (int ab = target.compose(a, b); ab >= 0)
        data.compose[{target.morphism(a), target.morphism(b)}] = target.morphism(ab);

  return validate_functor(validate_category(data), target, fdata);
}

FinFunctor gen_collapse_functor(const GenBounds& bounds, const FinCategory& target) {
  std::vector<int> nonid;
  for (int m = 0; m < target.morphism_count(); ++m)
    if (!target.is_identity(m)) nonid.push_back(m);
  if (nonid.empty())
    throw Error(Error::Code::generation_exhausted,
                "collapse source needs a non-identity morphism to duplicate");
  for (int p : nonid)
    for (int q : nonid) {
      int pq = target.compose(p, q);
      if (pq >= 0 && target.is_identity(pq))
        throw Error(Error::Code::generation_exhausted,
                    "collapse construction needs no non-identity composite to be an identity");
    }

  Rng rng(bounds.seed);
  std::set<int> duplicated;
  for (int k = 1 + rng.below(std::min(2, static_cast<int>(nonid.size()))); k > 0; --k)
    duplicated.insert(nonid[rng.below(static_cast<int>(nonid.size()))]);

  // Source category: every morphism of the target, plus a second copy
  // "m~1" of each duplicated one; copies multiply back onto the originals.
  CategoryData data;
  FunctorData fdata;
  data.objects = target.objects();
  struct Copy {
    int mor;
    int index;
  };
  std::vector<Copy> copies;
  std::map<std::string, Copy> by_label;
  for (int m = 0; m < target.morphism_count(); ++m) {
    copies.push_back({m, 0});
    by_label[target.morphism(m)] = {m, 0};
  }
  for (int m : duplicated) {
    copies.push_back({m, 1});
    by_label[target.morphism(m) + "~1"] = {m, 1};
  }
  for (const auto& [label, c] : by_label) {
    data.morphisms.push_back(
        {label, target.object(target.src(c.mor)), target.object(target.tgt(c.mor))});
    fdata.mor_map[label] = target.morphism(c.mor);
  }
  for (int c = 0; c < target.object_count(); ++c) {
    data.identity[target.object(c)] = target.morphism(target.identity(c));
    fdata.obj_map[target.object(c)] = target.object(c);
  }
  for (const auto& [la, ca] : by_label)
    for (const auto& [lb, cb] : by_label) {
      if (target.tgt(ca.mor) != target.src(cb.mor)) continue;
      std::string value;
      if (target.is_identity(ca.mor)) value = lb;
      else if (target.is_identity(cb.mor)) value = la;
      else value = target.morphism(target.compose(ca.mor, cb.mor));
      data.compose[{la, lb}] = value;
    }

  try {
    return validate_functor(validate_category(data), target, fdata);
  } catch (const Error& e) {
    throw Error(Error::Code::generation_exhausted,
                std::string("collapse construction failed: ") + e.what());
  }
}

std::optional<FullnessFailure> fullness_failure(const FinFunctor& f) {
  const FinCategory& c = f.source();
  const FinCategory& d = f.target();
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < c.object_count(); ++y) {
      auto preimages = c.hom(x, y);
      for (int g : d.hom(f.on_object(x), f.on_object(y))) {
        bool hit = false;
        for (int m : preimages)
          if (f.on_morphism(m) == g) {
            hit = true;
            break;
          }
        if (!hit) return FullnessFailure{c.object(x), c.object(y), d.morphism(g)};
      }
    }
  return std::nullopt;
}

std::optional<FaithfulnessFailure> faithfulness_failure(const FinFunctor& f) {
  const FinCategory& c = f.source();
  for (int m = 0; m < c.morphism_count(); ++m)
    for (int m2 = m + 1; m2 < c.morphism_count(); ++m2)
      if (c.src(m) == c.src(m2) && c.tgt(m) == c.tgt(m2) &&
          f.on_morphism(m) == f.on_morphism(m2))
        return FaithfulnessFailure{c.morphism(m), c.morphism(m2)};
  return std::nullopt;
}

bool is_full(const FinFunctor& f) { return !fullness_failure(f).has_value(); }
bool is_faithful(const FinFunctor& f) { return !faithfulness_failure(f).has_value(); }

std::vector<std::vector<std::string>> oracle_limit(const Presheaf& v) {
  const FinCategory& base = v.base();
  const int n = base.object_count();
  std::vector<std::vector<std::string>> out;
  std::vector<int> pick(n, 0);
  for (int c = 0; c < n; ++c)
    if (v.at(c).empty()) return out;  // empty factor, empty product (n > 0)

  while (true) {
    bool compatible = true;
    for (int a = 0; a < base.morphism_count() && compatible; ++a)
      if (v.action(a, pick[base.tgt(a)]) != pick[base.src(a)]) compatible = false;
    if (compatible) {
      std::vector<std::string> family;
      for (int c = 0; c < n; ++c) family.push_back(v.at(c)[pick[c]]);
      out.push_back(std::move(family));
    }
    int pos = n - 1;
    while (pos >= 0 && pick[pos] == static_cast<int>(v.at(pos).size()) - 1) pick[pos--] = 0;
    if (pos < 0) break;
    ++pick[pos];
  }
  return out;
}

std::vector<std::vector<std::pair<std::string, std::string>>> oracle_colimit(const Presheaf& v) {
  const FinCategory& base = v.base();
  std::vector<std::pair<int, int>> nodes;  // (object, element)
  for (int c = 0; c < base.object_count(); ++c)
    for (int e = 0; e < static_cast<int>(v.at(c).size()); ++e) nodes.emplace_back(c, e);
  auto index_of = [&](int c, int e) {
    return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), std::make_pair(c, e)) -
                            nodes.begin());
  };

  // Naive closure by repeated relabelling (deliberately not union-find, to
  // stay independent of the tensor machinery).
  std::vector<int> cls(nodes.size());
  std::iota(cls.begin(), cls.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < base.morphism_count(); ++a) {
      const int ct = base.tgt(a), cs = base.src(a);
      for (int e = 0; e < static_cast<int>(v.at(ct).size()); ++e) {
        int i = cls[index_of(ct, e)];
        int j = cls[index_of(cs, v.action(a, e))];
        if (i == j) continue;
        int lo = std::min(i, j), hi = std::max(i, j);
        for (auto& k : cls)
          if (k == hi) k = lo;
        changed = true;
      }
    }
  }

  std::map<int, std::vector<std::pair<std::string, std::string>>> grouped;
  for (size_t i = 0; i < nodes.size(); ++i)
    grouped[cls[i]].push_back({base.object(nodes[i].first), v.at(nodes[i].first)[nodes[i].second]});
  std::vector<std::vector<std::pair<std::string, std::string>>> out;
  for (auto& [root, members] : grouped) out.push_back(std::move(members));
  return out;
}

AdjunctionCandidate ran_adjunction(const FinFunctor& f, Check check) {
  AdjunctionCandidate c;
  c.name = "restriction left adjoint to right Kan extension";
  c.unit_base = f.target();
  c.counit_base = f.source();
  c.left_obj = [f, check](const Presheaf& u) { return restrict_presheaf(f, u, check); };
  c.left_mor = [f, check](const NatTrans& t) { return restrict_nat(f, t, check); };
  c.right_obj = [f, check](const Presheaf& v) { return ran(f, v, check).presheaf(); };
  c.right_mor = [f, check](const NatTrans& t) { return ran_map(f, t, check); };
  c.unit_at = [f, check](const Presheaf& u) { return ran_unit(f, u, check); };
  c.counit_at = [f, check](const Presheaf& v) { return ran_counit(f, v, check); };
  return c;
}

AdjunctionCandidate lan_adjunction(const FinFunctor& f, Check check) {
  AdjunctionCandidate c;
  c.name = "left Kan extension left adjoint to restriction";
  c.unit_base = f.source();
  c.counit_base = f.target();
  c.left_obj = [f, check](const Presheaf& v) { return lan(f, v, check).presheaf(); };
  c.left_mor = [f, check](const NatTrans& t) { return lan_map(f, t, check); };
  c.right_obj = [f, check](const Presheaf& u) { return restrict_presheaf(f, u, check); };
  c.right_mor = [f, check](const NatTrans& t) { return restrict_nat(f, t, check); };
  c.unit_at = [f, check](const Presheaf& v) { return lan_unit(f, v, check); };
  c.counit_at = [f, check](const Presheaf& u) { return lan_counit(f, u, check); };
  return c;
}

namespace {

std::string describe(const Presheaf& p) {
  nlohmann::json doc = nlohmann::json::object();
  for (int c = 0; c < p.base().object_count(); ++c) doc[p.base().object(c)] = p.at(c);
  return doc.dump();
}

std::vector<std::vector<int>> components_of(const NatTrans& t) {
  std::vector<std::vector<int>> out(t.base().object_count());
  for (int c = 0; c < t.base().object_count(); ++c) {
    out[c].resize(t.source().at(c).size());
    for (size_t e = 0; e < out[c].size(); ++e)
      out[c][e] = t.component(c, static_cast<int>(e));
  }
  return out;
}

}  // namespace

AdjunctionReport check_adjunction(const AdjunctionCandidate& cand,
                                  const std::vector<Presheaf>& unit_probes,
                                  const std::vector<Presheaf>& counit_probes) {
  AdjunctionReport report;
  auto fail = [&](const std::string& check, const std::string& detail) {
    report.failures.push_back({check, detail});
  };
  auto pass = [&]() { ++report.checks_passed; };

  for (const auto& a : unit_probes)
    if (!(a.base() == cand.unit_base))
      throw Error(Error::Code::base_mismatch, "unit probe lives over the wrong base");
  for (const auto& b : counit_probes)
    if (!(b.base() == cand.counit_base))
      throw Error(Error::Code::base_mismatch, "counit probe lives over the wrong base");

  const int na = static_cast<int>(unit_probes.size());
  const int nb = static_cast<int>(counit_probes.size());
  std::vector<Presheaf> left_of, right_of;
  std::vector<NatTrans> eta, eps;
  for (int i = 0; i < na; ++i) {
    left_of.push_back(cand.left_obj(unit_probes[i]));
    eta.push_back(cand.unit_at(unit_probes[i]));
  }
  for (int j = 0; j < nb; ++j) {
    right_of.push_back(cand.right_obj(counit_probes[j]));
    eps.push_back(cand.counit_at(counit_probes[j]));
  }

  // Unit/counit endpoints and componentwise naturality.
  for (int i = 0; i < na; ++i) {
    if (!(eta[i].source() == unit_probes[i]))
      fail("unit endpoint", "unit at probe " + describe(unit_probes[i]) +
                                " does not start at the probe");
    else pass();
    if (!(eta[i].target() == cand.right_obj(left_of[i])))
      fail("unit endpoint", "unit at probe " + describe(unit_probes[i]) +
                                " does not land in right(left(probe))");
    else pass();
    try {
      NatTrans::from_components(eta[i].source(), eta[i].target(), components_of(eta[i]),
                                Check::checked);
      pass();
    } catch (const Error& e) {
      fail("unit naturality", "at probe " + describe(unit_probes[i]) + ": " + e.what());
    }
  }
  for (int j = 0; j < nb; ++j) {
    if (!(eps[j].source() == cand.left_obj(right_of[j])))
      fail("counit endpoint", "counit at probe " + describe(counit_probes[j]) +
                                  " does not start at left(right(probe))");
    else pass();
    if (!(eps[j].target() == counit_probes[j]))
      fail("counit endpoint", "counit at probe " + describe(counit_probes[j]) +
                                  " does not end at the probe");
    else pass();
    try {
      NatTrans::from_components(eps[j].source(), eps[j].target(), components_of(eps[j]),
                                Check::checked);
      pass();
    } catch (const Error& e) {
      fail("counit naturality", "at probe " + describe(counit_probes[j]) + ": " + e.what());
    }
  }

  // Naturality of the unit and counit families along every transformation
  // between probes.
  for (int i = 0; i < na; ++i)
    for (int i2 = 0; i2 < na; ++i2)
      for (const NatTrans& r : enumerate_nat(unit_probes[i], unit_probes[i2])) {
        NatTrans lhs = compose_nat(r, eta[i2]);
        NatTrans rhs = compose_nat(eta[i], cand.right_mor(cand.left_mor(r)));
        if (lhs == rhs) pass();
        else
          fail("unit family naturality",
               "square at " + nat_component_label(r) + " between probes " +
                   describe(unit_probes[i]) + " and " + describe(unit_probes[i2]) +
                   " does not commute");
      }
  for (int j = 0; j < nb; ++j)
    for (int j2 = 0; j2 < nb; ++j2)
      for (const NatTrans& s : enumerate_nat(counit_probes[j], counit_probes[j2])) {
        NatTrans lhs = compose_nat(eps[j], s);
        NatTrans rhs = compose_nat(cand.left_mor(cand.right_mor(s)), eps[j2]);
        if (lhs == rhs) pass();
        else
          fail("counit family naturality",
               "square at " + nat_component_label(s) + " between probes " +
                   describe(counit_probes[j]) + " and " + describe(counit_probes[j2]) +
                   " does not commute");
      }

  // Triangle identities, elementwise.
  for (int i = 0; i < na; ++i) {
    NatTrans tri = compose_nat(cand.left_mor(eta[i]), cand.counit_at(left_of[i]));
    if (tri == id_nat(left_of[i])) pass();
    else
      fail("left triangle", "composite at probe " + describe(unit_probes[i]) +
                                " is " + nat_component_label(tri) + ", not the identity");
  }
  for (int j = 0; j < nb; ++j) {
    NatTrans tri = compose_nat(cand.unit_at(right_of[j]), cand.right_mor(eps[j]));
    if (tri == id_nat(right_of[j])) pass();
    else
      fail("right triangle", "composite at probe " + describe(counit_probes[j]) +
                                 " is " + nat_component_label(tri) + ", not the identity");
  }

  // Transposition bijections for every probe pair, with a bounded sample of
  // naturality squares for the correspondence itself.
  std::vector<std::vector<std::vector<NatTrans>>> homs_b(na);
  for (int i = 0; i < na; ++i) {
    homs_b[i].reserve(nb);
    for (int j = 0; j < nb; ++j)
      homs_b[i].push_back(enumerate_nat(left_of[i], counit_probes[j]));
  }
  auto phi = [&](int i, const NatTrans& t) {
    return compose_nat(eta[i], cand.right_mor(t));
  };
  auto psi = [&](int j, const NatTrans& s) {
    return compose_nat(cand.left_mor(s), eps[j]);
  };

  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      std::vector<NatTrans> homs_a = enumerate_nat(unit_probes[i], right_of[j]);
      const auto& homs = homs_b[i][j];
      if (homs.size() != homs_a.size())
        fail("hom-set size",
             "between probes " + describe(unit_probes[i]) + " and " +
                 describe(counit_probes[j]) + ": " + std::to_string(homs.size()) + " vs " +
                 std::to_string(homs_a.size()));
      else pass();
      for (const NatTrans& t : homs) {
        NatTrans u = phi(i, t);
        if (std::find(homs_a.begin(), homs_a.end(), u) == homs_a.end()) {
          fail("transpose lands in hom-set",
               "transpose of " + nat_component_label(t) + " missing from the enumeration");
          continue;
        }
        if (psi(j, u) == t) pass();
        else
          fail("round trip left-to-right",
               "transpose round trip changes " + nat_component_label(t));
      }
      for (const NatTrans& s : homs_a) {
        NatTrans u = psi(j, s);
        if (std::find(homs.begin(), homs.end(), u) == homs.end()) {
          fail("transpose lands in hom-set",
               "transpose of " + nat_component_label(s) + " missing from the enumeration");
          continue;
        }
        if (phi(i, u) == s) pass();
        else
          fail("round trip right-to-left",
               "transpose round trip changes " + nat_component_label(s));
      }
    }

  // Sampled naturality of the correspondence in both arguments.
  const size_t cap = 6;
  for (int i2 = 0; i2 < na; ++i2)
    for (int i = 0; i < na; ++i) {
      std::vector<NatTrans> rs = enumerate_nat(unit_probes[i2], unit_probes[i]);
      for (size_t ri = 0; ri < std::min(cap, rs.size()); ++ri)
        for (int j = 0; j < nb; ++j) {
          const auto& homs = homs_b[i][j];
          for (size_t ti = 0; ti < std::min(cap, homs.size()); ++ti) {
            NatTrans lhs = phi(i2, compose_nat(cand.left_mor(rs[ri]), homs[ti]));
            NatTrans rhs = compose_nat(rs[ri], phi(i, homs[ti]));
            if (lhs == rhs) pass();
            else
              fail("correspondence naturality (left argument)",
                   "at " + nat_component_label(rs[ri]) + " and " +
                       nat_component_label(homs[ti]));
          }
        }
    }
  for (int j = 0; j < nb; ++j)
    for (int j2 = 0; j2 < nb; ++j2) {
      std::vector<NatTrans> ss = enumerate_nat(counit_probes[j], counit_probes[j2]);
      for (size_t si = 0; si < std::min(cap, ss.size()); ++si)
        for (int i = 0; i < na; ++i) {
          const auto& homs = homs_b[i][j];
          for (size_t ti = 0; ti < std::min(cap, homs.size()); ++ti) {
            NatTrans lhs = phi(i, compose_nat(homs[ti], ss[si]));
            NatTrans rhs = compose_nat(phi(i, homs[ti]), cand.right_mor(ss[si]));
            if (lhs == rhs) pass();
            else
              fail("correspondence naturality (right argument)",
                   "at " + nat_component_label(ss[si]) + " and " +
                       nat_component_label(homs[ti]));
          }
        }
    }

  return report;
}

std::vector<Presheaf> std_probes(const FinCategory& base, std::uint64_t seed, int max_elements) {
  std::vector<Presheaf> probes;
  for (int c = 0; c < base.object_count(); ++c) probes.push_back(yoneda_obj(base, c));
  probes.push_back(constant_presheaf(base, {"k0"}));
  probes.push_back(constant_presheaf(base, {"k0", "k1"}));
  for (int i = 0; i < 3; ++i) {
    GenBounds b;
    b.max_elements = max_elements;
    b.seed = seed + static_cast<std::uint64_t>(i);
    probes.push_back(gen_presheaf(b, base));
  }
  return probes;
}

}  // namespace finkan
