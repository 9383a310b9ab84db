#pragma once

#include "finkan/functor.hpp"

namespace finkan {

// The representable presheaf of x: value at c is hom(c, x), with element
// labels the morphism labels, and a : c' -> c acting by precomposition,
// b |-> ab.
Presheaf yoneda_obj(const FinCategory& c, const std::string& x);
Presheaf yoneda_obj(const FinCategory& c, int x);

// The transformation hom(-, x) -> hom(-, y) induced by a : x -> y, given by
// postcomposition, b |-> ba.
NatTrans yoneda_mor(const FinCategory& c, const std::string& a);
NatTrans yoneda_mor(const FinCategory& c, int a);

// The corepresentable versions: presheaves on the opposite category, with
// value hom(x, -).
Presheaf co_yoneda_obj(const FinCategory& c, const std::string& x);
NatTrans co_yoneda_mor(const FinCategory& c, const std::string& a);

// The mutually inverse comparison maps between transformations
// hom(-, c) -> v (keyed by nat_component_label) and elements of v at c:
// forward evaluates at the identity of c, inverse sends x to the
// transformation a |-> action(a)(x). Both composites are verified to be
// identities before returning.
struct ComparisonIso {
  SetMap forward;
  SetMap inverse;
};
ComparisonIso yoneda_comparison(const Presheaf& v, const std::string& c);

}  // namespace finkan
