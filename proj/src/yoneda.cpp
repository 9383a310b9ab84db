#include "finkan/yoneda.hpp"

#include <algorithm>

namespace finkan {

Presheaf yoneda_obj(const FinCategory& cat, int x) {
  std::vector<std::vector<std::string>> elements(cat.object_count());
  for (int c = 0; c < cat.object_count(); ++c)
    for (int b : cat.hom(c, x)) elements[c].push_back(cat.morphism(b));
  // Element order at c equals morphism index order, which is label order.
  std::vector<std::vector<int>> action(cat.morphism_count());
  for (int a = 0; a < cat.morphism_count(); ++a) {
    auto dom = cat.hom(cat.tgt(a), x);
    auto cod = cat.hom(cat.src(a), x);
    action[a].resize(dom.size());
    for (size_t e = 0; e < dom.size(); ++e) {
      int img = cat.compose(a, dom[e]);
      action[a][e] =
          static_cast<int>(std::lower_bound(cod.begin(), cod.end(), img) - cod.begin());
    }
  }
  return Presheaf::from_parts(cat, std::move(elements), std::move(action), Check::checked);
}

Presheaf yoneda_obj(const FinCategory& cat, const std::string& x) {
  return yoneda_obj(cat, cat.object_index(x));
}

NatTrans yoneda_mor(const FinCategory& cat, int a) {
  const int x = cat.src(a), y = cat.tgt(a);
  Presheaf source = yoneda_obj(cat, x);
  Presheaf target = yoneda_obj(cat, y);
  std::vector<std::vector<int>> components(cat.object_count());
  for (int c = 0; c < cat.object_count(); ++c) {
    auto dom = cat.hom(c, x);
    auto cod = cat.hom(c, y);
    components[c].resize(dom.size());
    for (size_t e = 0; e < dom.size(); ++e) {
      int img = cat.compose(dom[e], a);
      components[c][e] =
          static_cast<int>(std::lower_bound(cod.begin(), cod.end(), img) - cod.begin());
    }
  }
  return NatTrans::from_components(std::move(source), std::move(target), std::move(components),
                                   Check::checked);
}

NatTrans yoneda_mor(const FinCategory& cat, const std::string& a) {
  return yoneda_mor(cat, cat.morphism_index(a));
}

Presheaf co_yoneda_obj(const FinCategory& cat, const std::string& x) {
  return yoneda_obj(opposite(cat), x);
}

NatTrans co_yoneda_mor(const FinCategory& cat, const std::string& a) {
  return yoneda_mor(opposite(cat), a);
}

ComparisonIso yoneda_comparison(const Presheaf& v, const std::string& obj) {
  const FinCategory& cat = v.base();
  const int c = cat.object_index(obj);
  const int id_c = cat.identity(c);

  Presheaf yc = yoneda_obj(cat, c);
  std::vector<NatTrans> nats = enumerate_nat(yc, v);

  std::vector<std::string> labels;
  for (const auto& t : nats) labels.push_back(nat_component_label(t));
  std::vector<int> order(nats.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int l, int r) { return labels[l] < labels[r]; });

  ComparisonIso iso;
  for (int i : order) iso.forward.domain.push_back(labels[i]);
  iso.forward.codomain = v.at(c);
  const int at_id = yc.element_index(c, cat.morphism(id_c));
  for (int i : order) iso.forward.assignment.push_back(nats[i].component(c, at_id));

  iso.inverse.domain = v.at(c);
  iso.inverse.codomain = iso.forward.domain;
  for (int x = 0; x < static_cast<int>(v.at(c).size()); ++x) {
    // The transformation induced by x: at c', a |-> action(a)(x).
    std::vector<std::vector<int>> components(cat.object_count());
    for (int cp = 0; cp < cat.object_count(); ++cp)
      for (int a : cat.hom(cp, c)) components[cp].push_back(v.action(a, x));
    NatTrans induced =
        NatTrans::from_components(yc, v, std::move(components), Check::checked);
    std::string label = nat_component_label(induced);
    auto it = std::lower_bound(iso.forward.domain.begin(), iso.forward.domain.end(), label);
    if (it == iso.forward.domain.end() || *it != label)
      throw Error(Error::Code::internal_error,
                  "induced transformation missing from the enumeration");
    iso.inverse.assignment.push_back(static_cast<int>(it - iso.forward.domain.begin()));
  }

  // Verify both composites are identities before handing the maps out.
  for (size_t i = 0; i < iso.forward.domain.size(); ++i)
    if (iso.inverse.assignment[iso.forward.assignment[i]] != static_cast<int>(i))
      throw Error(Error::Code::internal_error,
                  "comparison maps fail to invert on '" + iso.forward.domain[i] + "'",
                  {obj, iso.forward.domain[i]});
  for (size_t x = 0; x < iso.inverse.domain.size(); ++x)
    if (iso.forward.assignment[iso.inverse.assignment[x]] != static_cast<int>(x))
      throw Error(Error::Code::internal_error,
                  "comparison maps fail to invert on '" + iso.inverse.domain[x] + "'",
                  {obj, iso.inverse.domain[x]});

  return iso;
}

}  // namespace finkan
