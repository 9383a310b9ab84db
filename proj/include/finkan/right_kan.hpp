#pragma once

#include "finkan/yoneda.hpp"

namespace finkan {

// One elementwise discrepancy found while checking a triangle identity.
struct TriangleFailure {
  std::string triangle;  // which identity
  std::string object;
  std::string element;
  std::string detail;
};

struct TriangleReport {
  std::vector<TriangleFailure> failures;
  bool ok() const { return failures.empty(); }
};

// The right Kan extension of v along f : C -> D, pointwise over each object
// d of D: the elements are the natural transformations from the restriction
// of hom_D(-, d) along f to v, keyed by nat_component_label, and a morphism
// a : d' -> d acts by precomposing with the restriction of the induced map
// hom_D(-, d') -> hom_D(-, d).
class RanPresheaf {
public:
  const Presheaf& presheaf() const { return presheaf_; }

  // The transformation encoded by an element (index e over object d).
  const NatTrans& decode(int d, int e) const { return decode_[d][e]; }
  const NatTrans& decode(const std::string& d, const std::string& label) const;

private:
  friend RanPresheaf ran(const FinFunctor& f, const Presheaf& v, Check check);

  Presheaf presheaf_;
  std::vector<std::vector<NatTrans>> decode_;  // aligned with the element lists
};

RanPresheaf ran(const FinFunctor& f, const Presheaf& v, Check check = Check::checked);

// Functoriality of ran in v: the transformation ran(f, v) -> ran(f, v')
// induced by t : v -> v', acting by postcomposition with t.
NatTrans ran_map(const FinFunctor& f, const NatTrans& t, Check check = Check::checked);

// Unit of the adjunction (restriction left adjoint to ran): for a presheaf
// u on D, the transformation u -> ran(f, restrict(f, u)) sending x over d
// to the family a |-> action(a)(x).
NatTrans ran_unit(const FinFunctor& f, const Presheaf& u, Check check = Check::checked);

// Counit: for a presheaf v on C, the transformation
// restrict(f, ran(f, v)) -> v evaluating a family at the identity of f c.
NatTrans ran_counit(const FinFunctor& f, const Presheaf& v, Check check = Check::checked);

// Both triangle identities for the (restrict, ran) adjunction, elementwise:
// the u-side composite through restrict(f, u) and the v-side composite
// through ran(f, v) must both be identities.
TriangleReport ran_triangles(const FinFunctor& f, const Presheaf& u, const Presheaf& v,
                             Check check = Check::checked);

}  // namespace finkan
