#include "finkan/functor.hpp"

#include <numeric>

namespace finkan {

FunctorData FinFunctor::data() const {
  FunctorData raw;
  for (int c = 0; c < source_.object_count(); ++c)
    raw.obj_map[source_.object(c)] = target_.object(obj_map_[c]);
  for (int m = 0; m < source_.morphism_count(); ++m)
    raw.mor_map[source_.morphism(m)] = target_.morphism(mor_map_[m]);
  return raw;
}

namespace {

void check_laws(const FinCategory& src, const FinCategory& tgt, const std::vector<int>& obj_map,
                const std::vector<int>& mor_map) {
  for (int m = 0; m < src.morphism_count(); ++m) {
    int fm = mor_map[m];
    if (tgt.src(fm) != obj_map[src.src(m)] || tgt.tgt(fm) != obj_map[src.tgt(m)])
      throw Error(Error::Code::source_target_not_preserved,
                  "image of '" + src.morphism(m) + "' is '" + tgt.morphism(fm) +
                      "', whose endpoints do not match the image objects",
                  {src.morphism(m)});
  }
  for (int c = 0; c < src.object_count(); ++c)
    if (mor_map[src.identity(c)] != tgt.identity(obj_map[c]))
      throw Error(Error::Code::identity_not_preserved,
                  "identity of '" + src.object(c) + "' is not sent to an identity",
                  {src.object(c)});
  for (int a = 0; a < src.morphism_count(); ++a)
    for (int b = 0; b < src.morphism_count(); ++b) {
      int ab = src.compose(a, b);
      if (ab < 0) continue;
      if (mor_map[ab] != tgt.compose(mor_map[a], mor_map[b]))
        throw Error(Error::Code::composition_not_preserved,
                    "composite of ('" + src.morphism(a) + "', '" + src.morphism(b) +
                        "') is not preserved",
                    {src.morphism(a), src.morphism(b)});
    }
}

}  // namespace

FinFunctor FinFunctor::from_parts(FinCategory source, FinCategory target,
                                  std::vector<int> obj_map, std::vector<int> mor_map,
                                  Check check) {
  if (static_cast<int>(obj_map.size()) != source.object_count() ||
      static_cast<int>(mor_map.size()) != source.morphism_count())
    throw Error(Error::Code::internal_error, "functor parts have the wrong shape");
  for (int img : obj_map)
    if (img < 0 || img >= target.object_count())
      throw Error(Error::Code::unknown_object, "functor object image out of range");
  for (int img : mor_map)
    if (img < 0 || img >= target.morphism_count())
      throw Error(Error::Code::unknown_morphism, "functor morphism image out of range");
  if (check == Check::checked) check_laws(source, target, obj_map, mor_map);

  FinFunctor f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.obj_map_ = std::move(obj_map);
  f.mor_map_ = std::move(mor_map);
  return f;
}

FinFunctor validate_functor(const FinCategory& source, const FinCategory& target,
                            const FunctorData& raw) {
  std::vector<int> obj_map(source.object_count(), -1);
  for (const auto& [from, to] : raw.obj_map) {
    auto c = source.find_object(from);
    if (!c)
      throw Error(Error::Code::unknown_object,
                  "object map defined on unknown object '" + from + "'", {from});
    auto img = target.find_object(to);
    if (!img)
      throw Error(Error::Code::unknown_object,
                  "object map sends '" + from + "' to unknown object '" + to + "'", {from, to});
    obj_map[*c] = *img;
  }
  for (int c = 0; c < source.object_count(); ++c)
    if (obj_map[c] < 0)
      throw Error(Error::Code::semantic_error,
                  "object map is undefined on '" + source.object(c) + "'", {source.object(c)});

  std::vector<int> mor_map(source.morphism_count(), -1);
  for (const auto& [from, to] : raw.mor_map) {
    auto m = source.find_morphism(from);
    if (!m)
      throw Error(Error::Code::unknown_morphism,
                  "morphism map defined on unknown morphism '" + from + "'", {from});
    auto img = target.find_morphism(to);
    if (!img)
      throw Error(Error::Code::unknown_morphism,
                  "morphism map sends '" + from + "' to unknown morphism '" + to + "'",
                  {from, to});
    mor_map[*m] = *img;
  }
  for (int m = 0; m < source.morphism_count(); ++m)
    if (mor_map[m] < 0)
      throw Error(Error::Code::semantic_error,
                  "morphism map is undefined on '" + source.morphism(m) + "'",
                  {source.morphism(m)});

  return FinFunctor::from_parts(source, target, std::move(obj_map), std::move(mor_map),
                                Check::checked);
}

FinFunctor identity_functor(const FinCategory& c) {
  std::vector<int> obj_map(c.object_count());
  std::iota(obj_map.begin(), obj_map.end(), 0);
  std::vector<int> mor_map(c.morphism_count());
  std::iota(mor_map.begin(), mor_map.end(), 0);
  return FinFunctor::from_parts(c, c, std::move(obj_map), std::move(mor_map), Check::unchecked);
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (!(f.target() == g.source()))
    throw Error(Error::Code::composition_mismatch,
                "functor composition endpoints do not match");
  std::vector<int> obj_map(f.source().object_count());
  for (size_t c = 0; c < obj_map.size(); ++c)
    obj_map[c] = g.on_object(f.on_object(static_cast<int>(c)));
  std::vector<int> mor_map(f.source().morphism_count());
  for (size_t m = 0; m < mor_map.size(); ++m)
    mor_map[m] = g.on_morphism(f.on_morphism(static_cast<int>(m)));
  return FinFunctor::from_parts(f.source(), g.target(), std::move(obj_map), std::move(mor_map),
                                Check::unchecked);
}

FinFunctor opposite_functor(const FinFunctor& f) {
  // Labels (and hence indices) agree between a category and its opposite,
  // so the assignment carries over verbatim.
  std::vector<int> obj_map(f.source().object_count());
  for (size_t c = 0; c < obj_map.size(); ++c) obj_map[c] = f.on_object(static_cast<int>(c));
  std::vector<int> mor_map(f.source().morphism_count());
  for (size_t m = 0; m < mor_map.size(); ++m) mor_map[m] = f.on_morphism(static_cast<int>(m));
  return FinFunctor::from_parts(opposite(f.source()), opposite(f.target()), std::move(obj_map),
                                std::move(mor_map), Check::unchecked);
}

Presheaf restrict_presheaf(const FinFunctor& f, const Presheaf& u, Check check) {
  if (!(u.base() == f.target()))
    throw Error(Error::Code::base_mismatch,
                "presheaf restriction along a functor with a different target");
  const FinCategory& c = f.source();
  std::vector<std::vector<std::string>> elements(c.object_count());
  for (int x = 0; x < c.object_count(); ++x) elements[x] = u.at(f.on_object(x));
  std::vector<std::vector<int>> action(c.morphism_count());
  for (int m = 0; m < c.morphism_count(); ++m) {
    int fm = f.on_morphism(m);
    action[m].resize(u.at(u.base().tgt(fm)).size());
    for (size_t e = 0; e < action[m].size(); ++e)
      action[m][e] = u.action(fm, static_cast<int>(e));
  }
  return Presheaf::from_parts(c, std::move(elements), std::move(action), check);
}

NatTrans restrict_nat(const FinFunctor& f, const NatTrans& b, Check check) {
  Presheaf source = restrict_presheaf(f, b.source(), Check::unchecked);
  Presheaf target = restrict_presheaf(f, b.target(), Check::unchecked);
  std::vector<std::vector<int>> components(f.source().object_count());
  for (int c = 0; c < f.source().object_count(); ++c) {
    int fc = f.on_object(c);
    components[c].resize(b.source().at(fc).size());
    for (size_t e = 0; e < components[c].size(); ++e)
      components[c][e] = b.component(fc, static_cast<int>(e));
  }
  return NatTrans::from_components(std::move(source), std::move(target), std::move(components),
                                   check);
}

}  // namespace finkan
