#pragma once

#include <map>
#include <string>
#include <vector>

#include "finkan/presheaf.hpp"

namespace finkan {

// A natural transformation between two presheaves on the same base.
// component(c) maps elements of source at c to elements of target at c, and
// naturality says: for a : c' -> c, applying component(c) and then the
// target's action(a) agrees with the source's action(a) followed by
// component(c').
class NatTrans {
public:
  // The identity of the empty presheaf.
  NatTrans() = default;

  const Presheaf& source() const { return source_; }
  const Presheaf& target() const { return target_; }
  const FinCategory& base() const { return source_.base(); }

  int component(int c, int e) const { return components_[c][e]; }
  SetMap component_map(int c) const;
  SetMap component_map(const std::string& obj) const {
    return component_map(base().object_index(obj));
  }

  // Trusted constructor; checked mode re-verifies naturality elementwise.
  static NatTrans from_components(Presheaf source, Presheaf target,
                                  std::vector<std::vector<int>> components, Check check);

  friend bool operator==(const NatTrans&, const NatTrans&) = default;

private:
  Presheaf source_;
  Presheaf target_;
  std::vector<std::vector<int>> components_;  // per object
};

// Resolves a string-keyed family of component maps and verifies naturality
// on every morphism of the base.
NatTrans validate_nattrans(const Presheaf& source, const Presheaf& target,
                           const std::map<std::string, std::map<std::string, std::string>>& raw);

// Identity transformation of u.
NatTrans id_nat(const Presheaf& u);

// Diagrammatic composite "b then c"; requires b.target() == c.source()
// (CompositionMismatch otherwise).
NatTrans compose_nat(const NatTrans& b, const NatTrans& c);

// All natural transformations u -> v in a canonical order (components are
// enumerated object by object, lexicographically). Uses backtracking that
// prunes on each naturality square as soon as both endpoint components are
// fixed; the result agrees exactly with unpruned brute force.
std::vector<NatTrans> enumerate_nat(const Presheaf& u, const Presheaf& v);

// Canonical textual encoding of a transformation's full component table:
// compact JSON {object: {source element: target element}} with sorted keys,
// covering every object of the base. Distinct transformations between the
// same presheaves get distinct encodings.
std::string nat_component_label(const NatTrans& t);

}  // namespace finkan
