#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finkan/common.hpp"

namespace finkan {

// Conventions used throughout:
//
//  * Morphism composition is written diagrammatically: compose(a, b) is
//    "a then b", defined exactly when tgt(a) == src(b), with
//    src(ab) == src(a) and tgt(ab) == tgt(b).
//  * Objects, morphisms and elements are identified by string labels; the
//    canonical internal order is lexicographic by label, and every index
//    below refers to that order.

struct MorRecord {
  std::string id;
  std::string src;
  std::string tgt;

  friend bool operator==(const MorRecord&, const MorRecord&) = default;
};

// The raw, possibly invalid description of a finite category, as read from
// a document or assembled by hand.
struct CategoryData {
  std::vector<std::string> objects;
  std::vector<MorRecord> morphisms;
  std::map<std::string, std::string> identity;                        // object -> identity morphism
  std::map<std::pair<std::string, std::string>, std::string> compose; // (a, b) -> ab

  friend bool operator==(const CategoryData&, const CategoryData&) = default;
};

// A validated finite category. Instances can only be produced by
// validate_category, so every FinCategory satisfies all the axioms.
class FinCategory {
public:
  // The empty category (vacuously satisfies every axiom).
  FinCategory() = default;

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& morphisms() const { return morphisms_; }
  const std::string& object(int c) const { return objects_[c]; }
  const std::string& morphism(int m) const { return morphisms_[m]; }

  int src(int m) const { return src_[m]; }
  int tgt(int m) const { return tgt_[m]; }
  int identity(int c) const { return identity_[c]; }
  bool is_identity(int m) const { return identity_[src_[m]] == m && src_[m] == tgt_[m]; }

  // Diagrammatic composite "a then b"; -1 when tgt(a) != src(b).
  int compose(int a, int b) const { return table_[a * morphisms_.size() + b]; }

  // Label lookups. The *_index forms throw UnknownObject / UnknownMorphism.
  int object_index(const std::string& label) const;
  int morphism_index(const std::string& label) const;
  std::optional<int> find_object(const std::string& label) const;
  std::optional<int> find_morphism(const std::string& label) const;

  // Morphisms x -> y in canonical (label) order.
  std::vector<int> hom(int x, int y) const;

  // Round-trips back to the raw description (canonically ordered).
  CategoryData data() const;

  friend bool operator==(const FinCategory&, const FinCategory&) = default;

private:
  friend FinCategory validate_category(const CategoryData& raw);

  std::vector<std::string> objects_;   // sorted
  std::vector<std::string> morphisms_; // sorted
  std::vector<int> src_, tgt_;         // per morphism
  std::vector<int> identity_;          // per object
  std::vector<int> table_;             // morphism_count^2 composites, -1 = undefined
};

// Checks every axiom of a finite category presented by explicit tables:
// label sanity, identity assignment, composition defined exactly on
// composable pairs, source/target of composites, identity laws, and full
// associativity. Throws Error with the witnessing labels on failure.
FinCategory validate_category(const CategoryData& raw);

// The opposite category: same labels, sources and targets swapped,
// compose_op(a, b) = compose(b, a). Involutive on the nose.
FinCategory opposite(const FinCategory& c);

// Labels of the morphisms x -> y, canonically ordered.
std::vector<std::string> hom_set(const FinCategory& c, const std::string& x,
                                 const std::string& y);

}  // namespace finkan
