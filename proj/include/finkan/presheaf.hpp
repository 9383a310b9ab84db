#pragma once

#include <map>
#include <string>
#include <vector>

#include "finkan/category.hpp"

namespace finkan {

// An explicit map between ordered finite sets of labelled elements.
// assignment[i] is the codomain index of the image of domain[i].
struct SetMap {
  std::vector<std::string> domain;
  std::vector<std::string> codomain;
  std::vector<int> assignment;

  const std::string& image_of(const std::string& x) const;

  friend bool operator==(const SetMap&, const SetMap&) = default;
};

// Raw description of a presheaf over some base category.
struct PresheafData {
  std::map<std::string, std::vector<std::string>> elements;          // object -> element labels
  std::map<std::string, std::map<std::string, std::string>> action;  // morphism -> elementwise map

  friend bool operator==(const PresheafData&, const PresheafData&) = default;
};

// A contravariant finite-set-valued functor on a finite base category.
// For a morphism a : c' -> c the structure map action(a) sends elements
// over c (the target) to elements over c' (the source); functoriality
// reads action(ab) = action(b) followed by action(a).
class Presheaf {
public:
  // The empty presheaf on the empty category.
  Presheaf() = default;

  const FinCategory& base() const { return base_; }

  const std::vector<std::string>& at(int c) const { return elements_[c]; }
  const std::vector<std::string>& at(const std::string& obj) const {
    return elements_[base_.object_index(obj)];
  }

  // Index of a labelled element over object c; throws SemanticError if absent.
  int element_index(int c, const std::string& label) const;

  // Image under action(m) of element e (an index into at(tgt(m))),
  // as an index into at(src(m)).
  int action(int m, int e) const { return action_[m][e]; }
  SetMap action_map(int m) const;
  SetMap action_map(const std::string& mor) const {
    return action_map(base_.morphism_index(mor));
  }

  int total_elements() const;

  PresheafData data() const;

  // Trusted constructor for computed presheaves. Element lists may arrive in
  // any order; they are sorted into canonical label order (with the action
  // tables permuted to match). In checked mode the identity and
  // functoriality laws are re-verified.
  static Presheaf from_parts(FinCategory base, std::vector<std::vector<std::string>> elements,
                             std::vector<std::vector<int>> action, Check check);

  friend bool operator==(const Presheaf&, const Presheaf&) = default;

private:
  FinCategory base_;
  std::vector<std::vector<std::string>> elements_;  // per object, sorted
  std::vector<std::vector<int>> action_;            // per morphism m: at(tgt m) -> at(src m)
};

// Resolves labels against the base, checks totality and well-typedness of
// every structure map, then identity actions and functoriality.
Presheaf validate_presheaf(const FinCategory& base, const PresheafData& raw);

// The presheaf with the same finite set over every object and identity
// structure maps. An empty label list gives the empty presheaf.
Presheaf constant_presheaf(const FinCategory& base, const std::vector<std::string>& labels);

}  // namespace finkan
