#include "finkan/nattrans.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace finkan {

SetMap NatTrans::component_map(int c) const {
  return SetMap{source_.at(c), target_.at(c), components_[c]};
}

namespace {

// Shared naturality check; returns the offending (morphism, element) pair.
void check_naturality(const Presheaf& u, const Presheaf& v,
                      const std::vector<std::vector<int>>& comp) {
  const FinCategory& base = u.base();
  for (int a = 0; a < base.morphism_count(); ++a) {
    const int ct = base.tgt(a), cs = base.src(a);
    for (int e = 0; e < static_cast<int>(u.at(ct).size()); ++e)
      if (v.action(a, comp[ct][e]) != comp[cs][u.action(a, e)])
        throw Error(Error::Code::naturality_violation,
                    "naturality fails on morphism '" + base.morphism(a) + "' at element '" +
                        u.at(ct)[e] + "' over '" + base.object(ct) + "'",
                    {base.morphism(a), base.object(ct), u.at(ct)[e]});
  }
}

}  // namespace

NatTrans NatTrans::from_components(Presheaf source, Presheaf target,
                                   std::vector<std::vector<int>> components, Check check) {
  if (!(source.base() == target.base()))
    throw Error(Error::Code::base_mismatch,
                "natural transformation endpoints live over different bases");
  const FinCategory& base = source.base();
  if (static_cast<int>(components.size()) != base.object_count())
    throw Error(Error::Code::internal_error, "component family has the wrong shape");
  for (int c = 0; c < base.object_count(); ++c) {
    if (components[c].size() != source.at(c).size())
      throw Error(Error::Code::ill_typed_action,
                  "component at '" + base.object(c) + "' is not total", {base.object(c)});
    for (int img : components[c])
      if (img < 0 || img >= static_cast<int>(target.at(c).size()))
        throw Error(Error::Code::ill_typed_action,
                    "component at '" + base.object(c) + "' lands outside the target",
                    {base.object(c)});
  }
  if (check == Check::checked) check_naturality(source, target, components);

  NatTrans t;
  t.source_ = std::move(source);
  t.target_ = std::move(target);
  t.components_ = std::move(components);
  return t;
}

NatTrans validate_nattrans(const Presheaf& source, const Presheaf& target,
                           const std::map<std::string, std::map<std::string, std::string>>& raw) {
  if (!(source.base() == target.base()))
    throw Error(Error::Code::base_mismatch,
                "natural transformation endpoints live over different bases");
  const FinCategory& base = source.base();
  for (const auto& [obj, table] : raw) {
    (void)table;
    if (!base.find_object(obj))
      throw Error(Error::Code::semantic_error, "component listed for unknown object '" + obj + "'",
                  {obj});
  }
  std::vector<std::vector<int>> components(base.object_count());
  for (int c = 0; c < base.object_count(); ++c) {
    components[c].assign(source.at(c).size(), -1);
    auto it = raw.find(base.object(c));
    const std::map<std::string, std::string> empty;
    const auto& table = it == raw.end() ? empty : it->second;
    for (const auto& [from, to] : table) {
      int e = source.element_index(c, from);
      components[c][e] = target.element_index(c, to);
    }
    for (size_t e = 0; e < components[c].size(); ++e)
      if (components[c][e] < 0)
        throw Error(Error::Code::ill_typed_action,
                    "component at '" + base.object(c) + "' is undefined on element '" +
                        source.at(c)[e] + "'",
                    {base.object(c), source.at(c)[e]});
  }
  return NatTrans::from_components(source, target, std::move(components), Check::checked);
}

NatTrans id_nat(const Presheaf& u) {
  std::vector<std::vector<int>> components(u.base().object_count());
  for (int c = 0; c < u.base().object_count(); ++c) {
    components[c].resize(u.at(c).size());
    for (size_t e = 0; e < components[c].size(); ++e) components[c][e] = static_cast<int>(e);
  }
  return NatTrans::from_components(u, u, std::move(components), Check::unchecked);
}

NatTrans compose_nat(const NatTrans& b, const NatTrans& c) {
  if (!(b.target() == c.source()))
    throw Error(Error::Code::composition_mismatch,
                "composition of transformations whose middle presheaves differ");
  const FinCategory& base = b.base();
  std::vector<std::vector<int>> components(base.object_count());
  for (int o = 0; o < base.object_count(); ++o) {
    components[o].resize(b.source().at(o).size());
    for (size_t e = 0; e < components[o].size(); ++e)
      components[o][e] = c.component(o, b.component(o, static_cast<int>(e)));
  }
  // Naturality of a composite of natural maps is automatic.
  return NatTrans::from_components(b.source(), c.target(), std::move(components),
                                   Check::unchecked);
}

std::vector<NatTrans> enumerate_nat(const Presheaf& u, const Presheaf& v) {
  if (!(u.base() == v.base()))
    throw Error(Error::Code::base_mismatch, "enumeration endpoints live over different bases");
  const FinCategory& base = u.base();
  const int n_obj = base.object_count();

  // Morphisms whose naturality square closes exactly when object k gets its
  // component: both endpoints lie in {0..k} and at least one of them is k.
  std::vector<std::vector<int>> closing(n_obj);
  for (int a = 0; a < base.morphism_count(); ++a) {
    int hi = std::max(base.src(a), base.tgt(a));
    closing[hi].push_back(a);
  }

  std::vector<std::vector<int>> comp(n_obj);
  std::vector<NatTrans> out;

  auto square_ok = [&](int a) {
    const int ct = base.tgt(a), cs = base.src(a);
    for (int e = 0; e < static_cast<int>(u.at(ct).size()); ++e)
      if (v.action(a, comp[ct][e]) != comp[cs][u.action(a, e)]) return false;
    return true;
  };

  std::function<void(int)> place = [&](int k) {
    if (k == n_obj) {
      out.push_back(NatTrans::from_components(u, v, comp, Check::unchecked));
      return;
    }
    const int dom = static_cast<int>(u.at(k).size());
    const int cod = static_cast<int>(v.at(k).size());
    if (dom > 0 && cod == 0) return;  // no maps into an empty set

    comp[k].assign(dom, 0);
    // Odometer over all cod^dom assignments, last element fastest, so the
    // overall output order is lexicographic object by object.
    while (true) {
      bool natural = true;
      for (int a : closing[k])
        if (!square_ok(a)) {
          natural = false;
          break;
        }
      if (natural) place(k + 1);

      int pos = dom - 1;
      while (pos >= 0 && comp[k][pos] == cod - 1) comp[k][pos--] = 0;
      if (pos < 0) break;
      ++comp[k][pos];
    }
    comp[k].clear();
  };

  place(0);
  return out;
}

std::string nat_component_label(const NatTrans& t) {
  nlohmann::json doc = nlohmann::json::object();
  const FinCategory& base = t.base();
  for (int c = 0; c < base.object_count(); ++c) {
    nlohmann::json table = nlohmann::json::object();
    for (int e = 0; e < static_cast<int>(t.source().at(c).size()); ++e)
      table[t.source().at(c)[e]] = t.target().at(c)[t.component(c, e)];
    doc[base.object(c)] = std::move(table);
  }
  return doc.dump();
}

}  // namespace finkan
