#pragma once

#include <map>
#include <string>
#include <vector>

#include "finkan/nattrans.hpp"

namespace finkan {

// Raw description of a functor between two finite categories.
struct FunctorData {
  std::map<std::string, std::string> obj_map;
  std::map<std::string, std::string> mor_map;

  friend bool operator==(const FunctorData&, const FunctorData&) = default;
};

// A validated functor f : C -> D. Functor composition is applicative:
// compose_functors(g, f) applies f first.
class FinFunctor {
public:
  // The identity functor of the empty category.
  FinFunctor() = default;

  const FinCategory& source() const { return source_; }
  const FinCategory& target() const { return target_; }

  int on_object(int c) const { return obj_map_[c]; }
  int on_morphism(int m) const { return mor_map_[m]; }
  const std::string& on_object(const std::string& c) const {
    return target_.object(obj_map_[source_.object_index(c)]);
  }
  const std::string& on_morphism(const std::string& m) const {
    return target_.morphism(mor_map_[source_.morphism_index(m)]);
  }

  FunctorData data() const;

  // Trusted constructor; checked mode re-verifies all three functor laws.
  static FinFunctor from_parts(FinCategory source, FinCategory target, std::vector<int> obj_map,
                               std::vector<int> mor_map, Check check);

  friend bool operator==(const FinFunctor&, const FinFunctor&) = default;

private:
  FinCategory source_;
  FinCategory target_;
  std::vector<int> obj_map_;
  std::vector<int> mor_map_;
};

// Checks totality of both maps, preservation of endpoints, identities and
// all binary composites.
FinFunctor validate_functor(const FinCategory& source, const FinCategory& target,
                            const FunctorData& raw);

FinFunctor identity_functor(const FinCategory& c);

// Applicative composite: apply f, then g. Requires f.target() == g.source().
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);

// The same assignment read as a functor between the opposite categories.
FinFunctor opposite_functor(const FinFunctor& f);

// Restriction of a presheaf on D along f : C -> D: the presheaf on C with
// value u(f c) at c and structure map u(f a) at a. Shares u's element labels.
Presheaf restrict_presheaf(const FinFunctor& f, const Presheaf& u,
                           Check check = Check::checked);

// Whiskering: the restricted transformation with component at c given by
// b's component at f c.
NatTrans restrict_nat(const FinFunctor& f, const NatTrans& b, Check check = Check::checked);

}  // namespace finkan
