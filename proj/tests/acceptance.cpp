// Acceptance gate: one line per criterion, PASS or FAIL, exit code = number
// of failed criteria. Every comparison is exact; the instances are seeded
// and deterministic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "oracles.hpp"

#include "finkan/cli.hpp"
#include "finkan/io.hpp"

using namespace finkan;

namespace {

// ---------------------------------------------------------------------------
// Shared helpers

FinCategory pick_base(std::uint64_t seed) {
  switch (seed % 4) {
    case 0: return fx::cat2();
    case 1: return fx::loop3();
    case 2: return fx::cat1();
    default: return gen_category(GenBounds{3, 8, 2, seed});
  }
}

FinFunctor pick_functor(std::uint64_t i) {
  switch (i % 5) {
    case 0: return identity_functor(pick_base(i));
    case 1: return functor_to_terminal(pick_base(i));
    case 2: return fx::inc1();
    case 3: return gen_full_subcategory_inclusion(GenBounds{3, 8, 2, 500 + i}, pick_base(i));
    default:
      return gen_functor(GenBounds{3, 8, 2, 600 + i}, gen_category(GenBounds{2, 6, 2, 700 + i}),
                         pick_base(i));
  }
}

bool injective(const SetMap& m) {
  std::vector<bool> hit(m.codomain.size(), false);
  for (int i : m.assignment) {
    if (hit[i]) return false;
    hit[i] = true;
  }
  return true;
}

bool surjective(const SetMap& m) {
  std::vector<bool> hit(m.codomain.size(), false);
  for (int i : m.assignment) hit[i] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool bijective(const SetMap& m) { return injective(m) && surjective(m); }

bool componentwise(const NatTrans& t, bool (*pred)(const SetMap&)) {
  for (int c = 0; c < t.base().object_count(); ++c)
    if (!pred(t.component_map(c))) return false;
  return true;
}

std::map<std::string, std::string> as_table(const SetMap& m) {
  std::map<std::string, std::string> table;
  for (size_t i = 0; i < m.domain.size(); ++i) table[m.domain[i]] = m.codomain[m.assignment[i]];
  return table;
}

std::string at_seed(std::uint64_t seed) { return " at seed " + std::to_string(seed); }

// ---------------------------------------------------------------------------
// 1. Absolute Yoneda: |Nat(y_c, v)| = |v c| and the comparison maps are
//    mutually inverse, for 50 seeded (C, v, c).

bool criterion_yoneda(std::string& detail) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    FinCategory c = pick_base(i);
    Presheaf v = gen_presheaf(GenBounds{3, 8, 2, 1000 + i}, c);
    const std::string& x = c.object(static_cast<int>(i) % c.object_count());

    std::vector<NatTrans> all = enumerate_nat(yoneda_obj(c, x), v);
    if (all.size() != v.at(x).size()) {
      detail = "|Nat(y_c, v)| != |v c|" + at_seed(i);
      return false;
    }

    ComparisonIso iso = yoneda_comparison(v, x);
    std::vector<std::string> labels;
    for (const NatTrans& t : all) labels.push_back(nat_component_label(t));
    std::sort(labels.begin(), labels.end());
    std::vector<std::string> dom = iso.forward.domain;
    std::sort(dom.begin(), dom.end());
    if (labels != dom) {
      detail = "comparison domain is not the enumerated hom-set" + at_seed(i);
      return false;
    }
    for (const std::string& t : iso.forward.domain)
      if (iso.inverse.image_of(iso.forward.image_of(t)) != t) {
        detail = "inverse(forward) is not the identity" + at_seed(i);
        return false;
      }
    for (const std::string& e : iso.inverse.domain)
      if (iso.forward.image_of(iso.inverse.image_of(e)) != e) {
        detail = "forward(inverse) is not the identity" + at_seed(i);
        return false;
      }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 2. Right Kan adjunction: triangles, naturality of unit and counit, and the
//    hom-set correspondence as an explicit bijection, for 25 seeded (f, u, v).

bool criterion_ran(std::string& detail) {
  for (std::uint64_t i = 0; i < 25; ++i) {
    FinFunctor f = pick_functor(i);
    Presheaf u = gen_presheaf(GenBounds{3, 8, 2, 800 + i}, f.target());
    Presheaf v = gen_presheaf(GenBounds{3, 8, 2, 900 + i}, f.source());

    AdjunctionReport report = check_adjunction(ran_adjunction(f), {u}, {v});
    if (!report.ok()) {
      detail = "checker: " + report.failures[0].check + at_seed(i);
      return false;
    }
    if (!ran_triangles(f, u, v).ok()) {
      detail = "triangle identity failed" + at_seed(i);
      return false;
    }

    // The correspondence Nat(f^u, v) <-> Nat(u, ran f v), spelled out.
    RanPresheaf r = ran(f, v);
    Presheaf fu = restrict_presheaf(f, u);
    std::vector<NatTrans> lower = enumerate_nat(fu, v);
    std::vector<NatTrans> upper = enumerate_nat(u, r.presheaf());
    if (lower.size() != upper.size()) {
      detail = "hom-set sizes differ" + at_seed(i);
      return false;
    }
    std::set<std::string> upper_labels;
    for (const NatTrans& s : upper) upper_labels.insert(nat_component_label(s));
    std::set<std::string> seen;
    for (const NatTrans& t : lower) {
      NatTrans transposed = compose_nat(ran_unit(f, u), ran_map(f, t));
      std::string label = nat_component_label(transposed);
      if (!upper_labels.count(label)) {
        detail = "transpose left the hom-set" + at_seed(i);
        return false;
      }
      if (!seen.insert(label).second) {
        detail = "transpose is not injective" + at_seed(i);
        return false;
      }
      NatTrans back = compose_nat(restrict_nat(f, transposed), ran_counit(f, v));
      if (!(back == t)) {
        detail = "transpose round trip is not the identity" + at_seed(i);
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 3. Left Kan adjunction: same protocol, plus well-definedness of the counit
//    on tensor classes via the universal property.

bool criterion_lan(std::string& detail) {
  for (std::uint64_t i = 0; i < 25; ++i) {
    FinFunctor f = pick_functor(i);
    Presheaf u = gen_presheaf(GenBounds{3, 8, 2, 800 + i}, f.target());
    Presheaf v = gen_presheaf(GenBounds{3, 8, 2, 900 + i}, f.source());

    AdjunctionReport report = check_adjunction(lan_adjunction(f), {v}, {u});
    if (!report.ok()) {
      detail = "checker: " + report.failures[0].check + at_seed(i);
      return false;
    }
    if (!lan_triangles(f, u, v).ok()) {
      detail = "triangle identity failed" + at_seed(i);
      return false;
    }

    // The correspondence Nat(lan f v, u) <-> Nat(v, f^u), spelled out.
    LanPresheaf l = lan(f, v);
    Presheaf fu = restrict_presheaf(f, u);
    std::vector<NatTrans> lower = enumerate_nat(l.presheaf(), u);
    std::vector<NatTrans> upper = enumerate_nat(v, fu);
    if (lower.size() != upper.size()) {
      detail = "hom-set sizes differ" + at_seed(i);
      return false;
    }
    std::set<std::string> upper_labels;
    for (const NatTrans& t : upper) upper_labels.insert(nat_component_label(t));
    std::set<std::string> seen;
    for (const NatTrans& s : lower) {
      NatTrans transposed = compose_nat(lan_unit(f, v), restrict_nat(f, s));
      std::string label = nat_component_label(transposed);
      if (!upper_labels.count(label)) {
        detail = "transpose left the hom-set" + at_seed(i);
        return false;
      }
      if (!seen.insert(label).second) {
        detail = "transpose is not injective" + at_seed(i);
        return false;
      }
      NatTrans back = compose_nat(lan_map(f, transposed), lan_counit(f, u));
      if (!(back == s)) {
        detail = "transpose round trip is not the identity" + at_seed(i);
        return false;
      }
    }

    // Well-definedness of the counit: the elementwise evaluation assignment
    // is constant on tensor classes, i.e. factors through tensor_universal,
    // and the factorization is the counit's component table.
    NatTrans counit = lan_counit(f, u, Check::checked);
    LanPresheaf lfu = lan(f, fu);
    const FinCategory& d_cat = f.target();
    for (int d = 0; d < d_cat.object_count(); ++d) {
      const TensorProduct& t = lfu.tensor_at(d);
      std::vector<std::string> values;
      for (int p = 0; p < t.pair_count(); ++p) {
        const TensorPair& pr = t.pair(p);
        const std::string& x = t.left().at(pr.obj)[pr.left];
        const std::string& q = t.right().at(pr.obj)[pr.right];
        int qm = d_cat.morphism_index(q);
        int xi = u.element_index(d_cat.tgt(qm), x);
        values.push_back(u.at(d_cat.src(qm))[u.action(qm, xi)]);
      }
      std::vector<std::string> factored = tensor_universal(t, values);
      for (int e = 0; e < static_cast<int>(counit.source().at(d).size()); ++e) {
        if (factored[lfu.class_of_element(d, e)] != u.at(d)[counit.component(d, e)]) {
          detail = "counit does not match the universal factorization" + at_seed(i);
          return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 4. Corollaries: counit/unit components are bijective for full-and-faithful
//    functors; injective resp. surjective for full-but-not-faithful ones.

bool criterion_corollaries(std::string& detail) {
  int done = 0;
  for (std::uint64_t seed = 0; done < 10 && seed < 40; ++seed) {
    FinFunctor f = gen_full_subcategory_inclusion(GenBounds{4, 12, 2, 1500 + seed},
                                                  pick_base(seed));
    if (!is_full(f) || !is_faithful(f)) {
      detail = "generated inclusion is not full and faithful" + at_seed(seed);
      return false;
    }
    Presheaf v = gen_presheaf(GenBounds{3, 8, 2, 1600 + seed}, f.source());
    if (!componentwise(ran_counit(f, v), bijective)) {
      detail = "ran counit component not bijective" + at_seed(seed);
      return false;
    }
    if (!componentwise(lan_unit(f, v), bijective)) {
      detail = "lan unit component not bijective" + at_seed(seed);
      return false;
    }
    ++done;
  }
  if (done != 10) {
    detail = "fewer than 10 full-and-faithful instances";
    return false;
  }

  done = 0;
  for (std::uint64_t seed = 1; done < 10 && seed < 80; ++seed) {
    FinCategory target = (seed % 2) ? fx::cat2() : gen_category(GenBounds{3, 8, 2, 1700 + seed});
    FinFunctor f;
    try {
      f = gen_collapse_functor(GenBounds{3, 8, 2, 1800 + seed}, target);
    } catch (const Error&) {
      continue;  // target had nothing to collapse; next seed
    }
    if (!is_full(f) || is_faithful(f)) {
      detail = "generated collapse is not full-but-not-faithful" + at_seed(seed);
      return false;
    }
    Presheaf v = gen_presheaf(GenBounds{3, 8, 2, 1900 + seed}, f.source());
    if (!componentwise(ran_counit(f, v), injective)) {
      detail = "ran counit component not injective" + at_seed(seed);
      return false;
    }
    if (!componentwise(lan_unit(f, v), surjective)) {
      detail = "lan unit component not surjective" + at_seed(seed);
      return false;
    }
    ++done;
  }
  if (done != 10) {
    detail = "fewer than 10 full-but-not-faithful instances";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 5. Tensor correctness: the union-find partition equals the naive closure
//    oracle, and tensor_universal factors every compatible map uniquely.

bool criterion_tensor(std::string& detail) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    FinCategory c = pick_base(i);
    Presheaf v = gen_presheaf(GenBounds{3, 8, 2, 2000 + i}, c);
    Presheaf w = gen_presheaf(GenBounds{3, 8, 2, 3000 + i}, opposite(c));
    TensorProduct t = tensor(v, w);

    if (t.classes() != oracle::naive_tensor_partition(t)) {
      detail = "partition differs from the naive closure oracle" + at_seed(i);
      return false;
    }

    // Every class-constant assignment factors, uniquely, to its class table.
    for (int variant = 0; variant < 3; ++variant) {
      std::vector<std::string> expect(t.class_count());
      for (int k = 0; k < t.class_count(); ++k)
        expect[k] = variant == 0   ? std::to_string(k)
                    : variant == 1 ? std::string("k")
                                   : t.class_label(k);
      std::vector<std::string> values(t.pair_count());
      for (int p = 0; p < t.pair_count(); ++p) values[p] = expect[t.class_of(p)];
      if (tensor_universal(t, values) != expect) {
        detail = "universal factorization is wrong" + at_seed(i);
        return false;
      }
    }

    // Breaking constancy on a class with two members must be rejected.
    for (const std::vector<int>& members : t.classes()) {
      if (members.size() < 2) continue;
      std::vector<std::string> values(t.pair_count());
      for (int p = 0; p < t.pair_count(); ++p) values[p] = std::to_string(t.class_of(p));
      values[members[1]] = "elsewhere";
      try {
        tensor_universal(t, values);
        detail = "incompatible assignment was accepted" + at_seed(i);
        return false;
      } catch (const Error& e) {
        if (e.code() != Error::Code::not_coequalizing) {
          detail = "wrong rejection code" + at_seed(i);
          return false;
        }
      }
      break;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 6. Terminal-functor oracle equivalence: ran computes the limit, lan the
//    colimit, for 50 seeded presheaves; frozen fixture sizes.

bool criterion_oracles(std::string& detail) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    FinCategory c = pick_base(i);
    Presheaf v = gen_presheaf(GenBounds{3, 8, 2, 4000 + i}, c);
    FinFunctor to_terminal = functor_to_terminal(c);

    RanPresheaf r = ran(to_terminal, v);
    std::vector<std::vector<std::string>> families = oracle_limit(v);
    if (r.presheaf().at(0).size() != families.size()) {
      detail = "limit size mismatch" + at_seed(i);
      return false;
    }
    std::vector<std::vector<std::string>> decoded;
    for (int e = 0; e < static_cast<int>(r.presheaf().at(0).size()); ++e) {
      const NatTrans& t = r.decode(0, e);
      std::vector<std::string> family;
      for (int obj = 0; obj < c.object_count(); ++obj) {
        if (t.source().at(obj).size() != 1) {
          detail = "restricted representable is not a point" + at_seed(i);
          return false;
        }
        family.push_back(v.at(obj)[t.component(obj, 0)]);
      }
      decoded.push_back(family);
    }
    std::sort(decoded.begin(), decoded.end());
    if (decoded != families) {
      detail = "limit families differ from the oracle" + at_seed(i);
      return false;
    }

    LanPresheaf l = lan(to_terminal, v);
    std::vector<std::vector<std::pair<std::string, std::string>>> classes = oracle_colimit(v);
    if (l.presheaf().at(0).size() != classes.size()) {
      detail = "colimit size mismatch" + at_seed(i);
      return false;
    }
    const TensorProduct& t = l.tensor_at(0);
    std::vector<std::vector<std::pair<std::string, std::string>>> projected;
    for (const std::vector<int>& members : t.classes()) {
      std::vector<std::pair<std::string, std::string>> cls;
      for (int m : members) {
        const TensorPair& pr = t.pair(m);
        cls.push_back({c.object(pr.obj), v.at(pr.obj)[pr.left]});
      }
      std::sort(cls.begin(), cls.end());
      cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
      projected.push_back(cls);
    }
    std::sort(projected.begin(), projected.end());
    std::sort(classes.begin(), classes.end());
    if (projected != classes) {
      detail = "colimit classes differ from the oracle" + at_seed(i);
      return false;
    }
  }

  if (ran(fx::bang(), fx::v()).presheaf().at("*").size() != 2) {
    detail = "|ran(Bang, V)(*)| != 2";
    return false;
  }
  if (lan(fx::bang(), fx::v()).presheaf().at("*").size() != 1) {
    detail = "|lan(Bang, V)(*)| != 1";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 7. Identity-functor degeneration: ran(1, v) and lan(1, v) are isomorphic
//    to v via the comparison maps (unit and counit), on all standard probes.

bool criterion_identity(std::string& detail) {
  std::vector<FinCategory> bases = {fx::cat1(), fx::cat2(), fx::loop3(),
                                    gen_category(GenBounds{3, 8, 2, 21}),
                                    gen_category(GenBounds{3, 8, 2, 22})};
  for (size_t b = 0; b < bases.size(); ++b) {
    const FinCategory& base = bases[b];
    FinFunctor idf = identity_functor(base);
    for (const Presheaf& v : std_probes(base, 17)) {
      NatTrans ru = ran_unit(idf, v);
      NatTrans rc = ran_counit(idf, v);
      if (!(compose_nat(ru, rc) == id_nat(v)) ||
          !(compose_nat(rc, ru) == id_nat(ran(idf, v).presheaf()))) {
        detail = "ran comparison maps are not mutually inverse (base " + std::to_string(b) + ")";
        return false;
      }
      // The counit's component at c is evaluation at the identity: exactly
      // the absolute comparison map of v at c, and the unit its inverse.
      for (int c = 0; c < base.object_count(); ++c) {
        ComparisonIso iso = yoneda_comparison(v, base.object(c));
        if (as_table(rc.component_map(c)) != as_table(iso.forward) ||
            as_table(ru.component_map(c)) != as_table(iso.inverse)) {
          detail = "ran comparison differs from the absolute one (base " + std::to_string(b) +
                   ", object " + base.object(c) + ")";
          return false;
        }
      }

      NatTrans lu = lan_unit(idf, v);
      NatTrans lc = lan_counit(idf, v);
      if (!(compose_nat(lu, lc) == id_nat(v)) ||
          !(compose_nat(lc, lu) == id_nat(lan(idf, v).presheaf()))) {
        detail = "lan comparison maps are not mutually inverse (base " + std::to_string(b) + ")";
        return false;
      }
      if (!componentwise(lu, bijective) || !componentwise(lc, bijective)) {
        detail = "lan comparison maps are not isomorphisms (base " + std::to_string(b) + ")";
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 8. Mutation sensitivity: a catalog of single-point corruptions, each
//    detected by a validator or by the adjunction checker.

NatTrans post_swap(const NatTrans& t) {
  const Presheaf& target = t.target();
  std::vector<std::vector<int>> comp;
  bool swapped = false;
  for (int c = 0; c < target.base().object_count(); ++c) {
    std::vector<int> m(target.at(c).size());
    std::iota(m.begin(), m.end(), 0);
    if (m.size() == 2) {
      std::swap(m[0], m[1]);
      swapped = true;
    }
    comp.push_back(m);
  }
  if (!swapped) return t;
  return compose_nat(t, NatTrans::from_components(target, target, comp, Check::checked));
}

bool criterion_mutations(std::string& detail) {
  auto rejected = [](std::function<void()> body, std::optional<Error::Code> code) {
    try {
      body();
    } catch (const Error& e) {
      return !code || e.code() == *code;
    }
    return false;
  };

  struct Corruption {
    const char* name;
    std::function<bool()> detected;
  };
  std::vector<Corruption> catalog = {
      {"composition table value redirected",
       [&] {
         CategoryData bad = fx::cat2_data();
         bad.compose[{"id0", "a"}] = "id0";
         return rejected([&] { validate_category(bad); }, std::nullopt);
       }},
      {"composition table entry removed",
       [&] {
         CategoryData bad = fx::cat2_data();
         bad.compose.erase({"id0", "a"});
         return rejected([&] { validate_category(bad); },
                         Error::Code::composition_domain_error);
       }},
      {"non-composable entry added",
       [&] {
         CategoryData bad = fx::cat2_data();
         bad.compose[{"a", "a"}] = "a";
         return rejected([&] { validate_category(bad); },
                         Error::Code::composition_domain_error);
       }},
      {"identity assignment removed",
       [&] {
         CategoryData bad = fx::cat2_data();
         bad.identity.erase("0");
         return rejected([&] { validate_category(bad); }, Error::Code::missing_identity);
       }},
      {"identity law broken",
       [&] {
         CategoryData bad = fx::loop2().data();
         bad.compose[{"i", "e"}] = "i";
         return rejected([&] { validate_category(bad); },
                         Error::Code::identity_law_violation);
       }},
      {"associativity broken",
       [&] {
         CategoryData bad = fx::absorb_data();
         bad.compose[{"f", "f"}] = "e";
         return rejected([&] { validate_category(bad); },
                         Error::Code::associativity_violation);
       }},
      {"presheaf identity action corrupted",
       [&] {
         PresheafData bad = fx::v_data();
         bad.action["id1"] = {{"x", "y"}, {"y", "x"}};
         return rejected([&] { validate_presheaf(fx::cat2(), bad); },
                         Error::Code::identity_action_violation);
       }},
      {"presheaf functoriality corrupted",
       [&] {
         PresheafData bad;
         bad.elements = {{"c", {"p", "q"}}};
         bad.action = {{"i", {{"p", "p"}, {"q", "q"}}}, {"e", {{"p", "q"}, {"q", "q"}}}};
         return rejected([&] { validate_presheaf(fx::loop2(), bad); },
                         Error::Code::functoriality_violation);
       }},
      {"presheaf action out of fiber",
       [&] {
         PresheafData bad = fx::v_data();
         bad.action["a"] = {{"x", "x"}, {"y", "z"}};
         return rejected([&] { validate_presheaf(fx::cat2(), bad); },
                         Error::Code::ill_typed_action);
       }},
      {"functor identity not preserved",
       [&] {
         FunctorData bad;
         bad.obj_map = {{"*", "c"}};
         bad.mor_map = {{"id*", "e"}};
         return rejected([&] { validate_functor(fx::cat1(), fx::loop2(), bad); },
                         Error::Code::identity_not_preserved);
       }},
      {"functor composition not preserved",
       [&] {
         FunctorData bad;
         bad.obj_map = {{"c", "c"}};
         bad.mor_map = {{"i", "i"}, {"g", "g"}, {"h", "i"}};
         return rejected([&] { validate_functor(fx::loop3(), fx::loop3(), bad); },
                         Error::Code::composition_not_preserved);
       }},
      {"naturality broken in a transformation",
       [&] {
         PresheafData wd;
         wd.elements = {{"0", {"z0", "z1"}}, {"1", {"w"}}};
         wd.action = {{"id0", {{"z0", "z0"}, {"z1", "z1"}}},
                      {"id1", {{"w", "w"}}},
                      {"a", {{"w", "z0"}}}};
         Presheaf w = validate_presheaf(fx::cat2(), wd);
         std::map<std::string, std::map<std::string, std::string>> comp = {
             {"0", {{"z0", "z1"}, {"z1", "z1"}}}, {"1", {{"w", "w"}}}};
         return rejected([&] { validate_nattrans(w, w, comp); },
                         Error::Code::naturality_violation);
       }},
      {"ran unit corrupted by a swap automorphism",
       [&] {
         AdjunctionCandidate cand = ran_adjunction(fx::bang());
         auto honest = cand.unit_at;
         cand.unit_at = [honest](const Presheaf& u) { return post_swap(honest(u)); };
         Presheaf u2 = constant_presheaf(cand.unit_base, {"p", "q"});
         Presheaf v2 = constant_presheaf(cand.counit_base, {"p", "q"});
         return !check_adjunction(cand, {u2}, {v2}).ok();
       }},
      {"lan counit corrupted by a swap automorphism",
       [&] {
         AdjunctionCandidate cand = lan_adjunction(fx::bang());
         auto honest = cand.counit_at;
         cand.counit_at = [honest](const Presheaf& v) { return post_swap(honest(v)); };
         Presheaf u2 = constant_presheaf(cand.unit_base, {"p", "q"});
         Presheaf v2 = constant_presheaf(cand.counit_base, {"p", "q"});
         return !check_adjunction(cand, {u2}, {v2}).ok();
       }},
      {"tensor assignment not constant on a class",
       [&] {
         TensorProduct t = tensor(fx::v(), co_yoneda_obj(fx::cat2(), "0"));
         return rejected([&] { tensor_universal(t, {"k", "k", "l"}); },
                         Error::Code::not_coequalizing);
       }},
  };

  if (catalog.size() < 10) {
    detail = "catalog has fewer than 10 corruptions";
    return false;
  }
  for (const Corruption& c : catalog) {
    if (!c.detected()) {
      detail = std::string("undetected: ") + c.name;
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 9. Determinism: byte-identical CLI output across runs; parse/serialize is
//    the identity on the fixture corpus.

bool criterion_determinism(std::string& detail) {
  std::vector<std::vector<std::string>> invocations = {
      {"validate", fx::path("n_vv.json")},
      {"validate", fx::path("cow0_cat2.json")},
      {"yoneda", fx::path("cat2.json"), "--object", "0"},
      {"yoneda", fx::path("cat2.json"), "--morphism", "a"},
      {"nat", "--left", fx::path("v.json"), "--right", fx::path("v.json")},
      {"ran", "--functor", fx::path("bang.json"), "--presheaf", fx::path("v.json")},
      {"lan", "--functor", fx::path("inc1.json"), "--presheaf", fx::path("p_cat1.json")},
      {"tensor", "--left", fx::path("v.json"), "--right", fx::path("cow0_cat2.json")},
      {"unit", "--mode", "ran", "--functor", fx::path("bang.json"), "--presheaf",
       fx::path("p_cat1.json")},
      {"counit", "--mode", "lan", "--functor", fx::path("bang.json"), "--presheaf",
       fx::path("p_cat1.json")},
      {"check-adjunction", "--mode", "ran", "--functor", fx::path("inc1.json")},
      {"check-adjunction", "--mode", "lan", "--functor", fx::path("bang.json")},
      {"gen", "--kind", "category", "--seed", "13"},
      {"gen", "--kind", "presheaf", "--seed", "13", "--base", fx::path("cat2.json")},
  };
  for (const auto& args : invocations) {
    std::ostringstream out1, err1, out2, err2;
    int rc1 = run_cli(args, out1, err1);
    int rc2 = run_cli(args, out2, err2);
    if (rc1 != 0 || rc2 != 0) {
      detail = "invocation '" + args[0] + "' did not succeed";
      return false;
    }
    if (out1.str() != out2.str() || err1.str() != err2.str()) {
      detail = "invocation '" + args[0] + "' is not byte-deterministic";
      return false;
    }
  }

  for (const std::string& name :
       {"cat1.json", "cat2.json", "v.json", "bang.json", "inc1.json", "id_cat2.json",
        "one_cat2.json", "w_cat1.json", "cow0_cat2.json", "n_vv.json", "p_cat1.json"}) {
    std::string text = read_file(fx::path(name));
    if (serialize_document(parse_document(text)) != text) {
      detail = std::string("round trip is not the identity on ") + name;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*fn)(std::string&);
  };
  const Criterion criteria[] = {
      {"absolute Yoneda comparison on 50 seeded instances", criterion_yoneda},
      {"right Kan adjunction on 25 seeded instances", criterion_ran},
      {"left Kan adjunction on 25 seeded instances", criterion_lan},
      {"unit/counit corollaries for 10+10 seeded full functors", criterion_corollaries},
      {"tensor partition and universal property on 50 seeded instances", criterion_tensor},
      {"terminal-functor limits and colimits against oracles on 50 seeded instances",
       criterion_oracles},
      {"identity-functor degeneration on the standard probes", criterion_identity},
      {"detection of every cataloged single-point corruption", criterion_mutations},
      {"CLI byte determinism and fixture round trips", criterion_determinism},
  };

  int failed = 0;
  for (size_t i = 0; i < std::size(criteria); ++i) {
    std::string det;
    bool ok = false;
    try {
      ok = criteria[i].fn(det);
    } catch (const std::exception& e) {
      det = e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].name;
    if (!ok) std::cout << " [" << det << "]";
    std::cout << "\n";
    if (!ok) ++failed;
  }
  return failed;
}
