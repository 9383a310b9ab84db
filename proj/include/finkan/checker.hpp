#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "finkan/left_kan.hpp"

namespace finkan {

// Size budget and seed for the instance generators. Everything produced is
// valid by construction (and re-validated before being returned); the same
// bounds and seed always reproduce the same instance, bit for bit,
// independent of platform.
struct GenBounds {
  int max_objects = 3;
  int max_morphisms = 8;
  int max_elements = 3;  // per object, for generated presheaves
  std::uint64_t seed = 0;
};

// Categories are generated as free categories on random graphs: either all
// paths of a random acyclic graph, or, in a collapse variant, paths of
// bounded length over an arbitrary graph together with absorbing "sink"
// morphisms that soak up every longer composite.
FinCategory gen_category(const GenBounds& bounds);

// Presheaves are generated as finite colimits of representables: a random
// coproduct of representables with a random batch of identifications,
// closed up to a congruence. Every finite presheaf arises this way.
Presheaf gen_presheaf(const GenBounds& bounds, const FinCategory& base);

// Functors are generated by choosing images of objects and of irreducible
// morphisms, deriving the rest, and retrying on law failures; falls back to
// a constant functor. Throws GenerationExhausted only when the target is
// empty (there is nothing to map to).
FinFunctor gen_functor(const GenBounds& bounds, const FinCategory& source,
                       const FinCategory& target);

// A full-and-faithful example: the inclusion of a random full subcategory.
FinFunctor gen_full_subcategory_inclusion(const GenBounds& bounds, const FinCategory& target);

// A full-but-not-faithful example: duplicate some non-identity morphisms of
// the target and project the copies back down. Requires a target with a
// non-identity morphism and no non-identity composite equal to an identity
// (categories from gen_category qualify); GenerationExhausted otherwise.
FinFunctor gen_collapse_functor(const GenBounds& bounds, const FinCategory& target);

// Hom-set surjectivity/injectivity of a functor, with witnesses.
struct FullnessFailure {
  std::string x, y;         // objects of the source
  std::string morphism;     // a morphism F x -> F y with no preimage
};
struct FaithfulnessFailure {
  std::string a, b;         // distinct parallel morphisms with equal images
};
std::optional<FullnessFailure> fullness_failure(const FinFunctor& f);
std::optional<FaithfulnessFailure> faithfulness_failure(const FinFunctor& f);
bool is_full(const FinFunctor& f);
bool is_faithful(const FinFunctor& f);

// Brute-force limit of a presheaf (as a diagram of sets): all families
// (x_c) with action(a)(x_c) = x_c' for every a : c' -> c. Families are
// returned as label tuples in object order, lexicographically.
std::vector<std::vector<std::string>> oracle_limit(const Presheaf& v);

// Brute-force colimit: the partition of the disjoint union of all elements
// by the naive closure of x ~ action(a)(x). Classes are sorted by least
// member, members as (object, element) label pairs in lexicographic order.
std::vector<std::vector<std::pair<std::string, std::string>>> oracle_colimit(const Presheaf& v);

// The one-object one-morphism category (object "*") and the unique functor
// into it; restriction along it is the constant-diagram functor, so its
// right/left Kan extensions compute limits/colimits.
FinCategory terminal_category();
FinFunctor functor_to_terminal(const FinCategory& c);

// A candidate adjunction presented through its action on presheaves over
// two bases: the left adjoint maps presheaves on unit_base to presheaves on
// counit_base, the right adjoint goes back, the unit sits at presheaves on
// unit_base and the counit at presheaves on counit_base.
struct AdjunctionCandidate {
  std::string name;
  FinCategory unit_base;
  FinCategory counit_base;
  std::function<Presheaf(const Presheaf&)> left_obj;
  std::function<NatTrans(const NatTrans&)> left_mor;
  std::function<Presheaf(const Presheaf&)> right_obj;
  std::function<NatTrans(const NatTrans&)> right_mor;
  std::function<NatTrans(const Presheaf&)> unit_at;
  std::function<NatTrans(const Presheaf&)> counit_at;
};

// The two Kan adjunctions for a functor f : C -> D: restriction left
// adjoint to right Kan extension, and left Kan extension left adjoint to
// restriction.
AdjunctionCandidate ran_adjunction(const FinFunctor& f, Check check = Check::checked);
AdjunctionCandidate lan_adjunction(const FinFunctor& f, Check check = Check::checked);

struct CheckFailure {
  std::string check;
  std::string detail;
};
struct AdjunctionReport {
  int checks_passed = 0;
  std::vector<CheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Verifies, exhaustively at element level over the finite probe sets:
// endpoint shapes and naturality of every unit/counit component, naturality
// of the unit/counit families along every transformation between probes,
// both triangle identities, and that the transposition maps
// t |-> unit ; right(t) and s |-> left(s) ; counit are mutually inverse
// bijections between the enumerated hom-sets (with matching sizes).
// Naturality of the correspondence itself is additionally checked on a
// bounded sample of transformations (first few in canonical order).
AdjunctionReport check_adjunction(const AdjunctionCandidate& candidate,
                                  const std::vector<Presheaf>& unit_probes,
                                  const std::vector<Presheaf>& counit_probes);

// The standard probe family on a base: every representable, the constant
// singleton and doubleton, and three seeded random presheaves.
std::vector<Presheaf> std_probes(const FinCategory& base, std::uint64_t seed,
                                 int max_elements = 2);

}  // namespace finkan
