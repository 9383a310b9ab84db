#include "finkan/right_kan.hpp"

#include <algorithm>

namespace finkan {

namespace {

// Elementwise comparison of a transformation against the identity,
// collecting failures into a triangle report.
void compare_with_identity(const NatTrans& t, const char* triangle, TriangleReport& report) {
  const FinCategory& base = t.base();
  for (int c = 0; c < base.object_count(); ++c)
    for (int e = 0; e < static_cast<int>(t.source().at(c).size()); ++e)
      if (t.component(c, e) != e)
        report.failures.push_back(
            {triangle, base.object(c), t.source().at(c)[e],
             "maps to '" + t.target().at(c)[t.component(c, e)] + "' instead of itself"});
}

}  // namespace

const NatTrans& RanPresheaf::decode(const std::string& d, const std::string& label) const {
  int di = presheaf_.base().object_index(d);
  return decode_[di][presheaf_.element_index(di, label)];
}

RanPresheaf ran(const FinFunctor& f, const Presheaf& v, Check check) {
  if (!(v.base() == f.source()))
    throw Error(Error::Code::base_mismatch,
                "right Kan extension of a presheaf not living over the functor's source");
  const FinCategory& d_cat = f.target();

  // Pointwise value at d: transformations restrict(f, hom(-, d)) -> v.
  std::vector<Presheaf> probes;
  std::vector<std::vector<NatTrans>> nats(d_cat.object_count());
  std::vector<std::vector<std::string>> labels(d_cat.object_count());
  for (int d = 0; d < d_cat.object_count(); ++d) {
    probes.push_back(restrict_presheaf(f, yoneda_obj(d_cat, d), Check::unchecked));
    for (auto& t : enumerate_nat(probes[d], v)) {
      labels[d].push_back(nat_component_label(t));
      nats[d].push_back(std::move(t));
    }
  }

  // Canonical element order is label order; remember the permutation so the
  // decode table can be aligned with it.
  std::vector<std::vector<int>> order(d_cat.object_count());
  std::vector<std::vector<std::string>> elements(d_cat.object_count());
  for (int d = 0; d < d_cat.object_count(); ++d) {
    order[d].resize(nats[d].size());
    for (size_t i = 0; i < order[d].size(); ++i) order[d][i] = static_cast<int>(i);
    std::sort(order[d].begin(), order[d].end(),
              [&](int l, int r) { return labels[d][l] < labels[d][r]; });
    for (int i : order[d]) elements[d].push_back(labels[d][i]);
  }
  auto element_of = [&](int d, const std::string& label) -> int {
    auto it = std::lower_bound(elements[d].begin(), elements[d].end(), label);
    if (it == elements[d].end() || *it != label)
      throw Error(Error::Code::internal_error,
                  "composite transformation missing from the pointwise enumeration");
    return static_cast<int>(it - elements[d].begin());
  };

  // a : d' -> d acts by precomposition with restrict(f, hom(-, a)).
  std::vector<std::vector<int>> action(d_cat.morphism_count());
  for (int a = 0; a < d_cat.morphism_count(); ++a) {
    const int dt = d_cat.tgt(a), ds = d_cat.src(a);
    NatTrans induced = restrict_nat(f, yoneda_mor(d_cat, a), Check::unchecked);
    action[a].resize(elements[dt].size());
    for (size_t e = 0; e < elements[dt].size(); ++e) {
      const NatTrans& xi = nats[dt][order[dt][e]];
      action[a][e] = element_of(ds, nat_component_label(compose_nat(induced, xi)));
    }
  }

  RanPresheaf out;
  out.presheaf_ = Presheaf::from_parts(d_cat, elements, std::move(action), check);
  out.decode_.resize(d_cat.object_count());
  for (int d = 0; d < d_cat.object_count(); ++d)
    for (int i : order[d]) out.decode_[d].push_back(std::move(nats[d][i]));
  return out;
}

NatTrans ran_map(const FinFunctor& f, const NatTrans& t, Check check) {
  RanPresheaf rv = ran(f, t.source(), check);
  RanPresheaf rw = ran(f, t.target(), check);
  const FinCategory& d_cat = f.target();
  std::vector<std::vector<int>> components(d_cat.object_count());
  for (int d = 0; d < d_cat.object_count(); ++d) {
    components[d].resize(rv.presheaf().at(d).size());
    for (size_t e = 0; e < components[d].size(); ++e) {
      std::string label = nat_component_label(compose_nat(rv.decode(d, static_cast<int>(e)), t));
      components[d][e] = rw.presheaf().element_index(d, label);
    }
  }
  return NatTrans::from_components(rv.presheaf(), rw.presheaf(), std::move(components), check);
}

NatTrans ran_unit(const FinFunctor& f, const Presheaf& u, Check check) {
  if (!(u.base() == f.target()))
    throw Error(Error::Code::base_mismatch,
                "unit is taken at a presheaf over the functor's target");
  const FinCategory& d_cat = f.target();
  const FinCategory& c_cat = f.source();
  Presheaf ru = restrict_presheaf(f, u, Check::unchecked);
  RanPresheaf r = ran(f, ru, check);

  std::vector<std::vector<int>> components(d_cat.object_count());
  for (int d = 0; d < d_cat.object_count(); ++d) {
    Presheaf probe = restrict_presheaf(f, yoneda_obj(d_cat, d), Check::unchecked);
    components[d].resize(u.at(d).size());
    for (int x = 0; x < static_cast<int>(u.at(d).size()); ++x) {
      // The family sending a : f c -> d to action(a)(x).
      std::vector<std::vector<int>> family(c_cat.object_count());
      for (int c = 0; c < c_cat.object_count(); ++c) {
        const auto& dom = probe.at(c);
        family[c].resize(dom.size());
        for (size_t i = 0; i < dom.size(); ++i)
          family[c][i] = u.action(d_cat.morphism_index(dom[i]), x);
      }
      NatTrans xi = NatTrans::from_components(probe, ru, std::move(family), check);
      components[d][x] = r.presheaf().element_index(d, nat_component_label(xi));
    }
  }
  return NatTrans::from_components(u, r.presheaf(), std::move(components), check);
}

NatTrans ran_counit(const FinFunctor& f, const Presheaf& v, Check check) {
  const FinCategory& c_cat = f.source();
  const FinCategory& d_cat = f.target();
  RanPresheaf r = ran(f, v, check);
  Presheaf source = restrict_presheaf(f, r.presheaf(), Check::unchecked);

  std::vector<std::vector<int>> components(c_cat.object_count());
  for (int c = 0; c < c_cat.object_count(); ++c) {
    const int fc = f.on_object(c);
    components[c].resize(source.at(c).size());
    for (size_t e = 0; e < components[c].size(); ++e) {
      const NatTrans& xi = r.decode(fc, static_cast<int>(e));
      // Evaluate the family at the identity of f c.
      int at_id = xi.source().element_index(c, d_cat.morphism(d_cat.identity(fc)));
      components[c][e] = xi.component(c, at_id);
    }
  }
  return NatTrans::from_components(std::move(source), v, std::move(components), check);
}

TriangleReport ran_triangles(const FinFunctor& f, const Presheaf& u, const Presheaf& v,
                             Check check) {
  TriangleReport report;

  // Restriction side: restrict the unit of u, then apply the counit at
  // restrict(f, u); the composite must be the identity on restrict(f, u).
  {
    Presheaf ru = restrict_presheaf(f, u, Check::unchecked);
    NatTrans first = restrict_nat(f, ran_unit(f, u, check), check);
    NatTrans second = ran_counit(f, ru, check);
    compare_with_identity(compose_nat(first, second), "restrict-side triangle", report);
  }

  // Extension side: the unit at ran(f, v), then ran applied to the counit
  // of v; the composite must be the identity on ran(f, v).
  {
    Presheaf rv = ran(f, v, check).presheaf();
    NatTrans first = ran_unit(f, rv, check);
    NatTrans second = ran_map(f, ran_counit(f, v, check), check);
    compare_with_identity(compose_nat(first, second), "extension-side triangle", report);
  }

  return report;
}

}  // namespace finkan
