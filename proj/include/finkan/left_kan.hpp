#pragma once

#include "finkan/right_kan.hpp"

namespace finkan {

// A pair contributing to a tensor product: an object c of the base, an
// element of v at c, and an element of w at c (w lives on the opposite
// base). Indices refer to the canonical element orders.
struct TensorPair {
  int obj;
  int left;
  int right;

  friend bool operator==(const TensorPair&, const TensorPair&) = default;
};

// The tensor product of a presheaf v on C with a presheaf w on C^op: the
// disjoint union of the pairwise products v(c) x w(c), identified under
// (action(a)(p'), q) ~ (p', action(a)(q)) for every a : c -> c' of C,
// p' in v(c'), q in w(c). Classes are computed by union-find over the
// generated relation; the representative of a class is its
// lexicographically least pair, and class order follows representatives.
class TensorProduct {
public:
  const Presheaf& left() const { return left_; }
  const Presheaf& right() const { return right_; }

  int pair_count() const { return static_cast<int>(pairs_.size()); }
  const TensorPair& pair(int i) const { return pairs_[i]; }
  int pair_index(int obj, int left, int right) const;
  std::string pair_label(int i) const;  // compact JSON [object, left, right]

  int class_count() const { return static_cast<int>(reps_.size()); }
  int class_of(int pair) const { return class_of_[pair]; }
  int representative(int cls) const { return reps_[cls]; }
  std::string class_label(int cls) const { return pair_label(reps_[cls]); }
  // Members of each class, as sorted pair indices.
  std::vector<std::vector<int>> classes() const;

  friend bool operator==(const TensorProduct&, const TensorProduct&) = default;

private:
  friend TensorProduct tensor(const Presheaf& v, const Presheaf& w);

  Presheaf left_;
  Presheaf right_;
  std::vector<TensorPair> pairs_;  // lexicographic by (obj, left, right)
  std::vector<int> class_of_;      // pair -> class
  std::vector<int> reps_;          // class -> least member pair
};

// Requires w.base() == opposite(v.base()) (BaseMismatch otherwise).
TensorProduct tensor(const Presheaf& v, const Presheaf& w);

// Universal property: given values on pairs (indexed like t.pair(i)) that
// are compatible with the generating relation, returns the unique
// factorization through the classes (indexed like t.class_label). An
// incompatible assignment raises NotCoequalizing naming a witnessing
// (morphism, left element, right element).
std::vector<std::string> tensor_universal(const TensorProduct& t,
                                          const std::vector<std::string>& values);

// Functoriality of the tensor product: the map on classes induced by
// m : v -> v' and n : w -> w' (both over the appropriate bases).
struct TensorMorphism {
  TensorProduct source;
  TensorProduct target;
  std::vector<int> class_map;  // source class -> target class
};
TensorMorphism tensor_on_mor(const NatTrans& m, const NatTrans& n);

// The left Kan extension of v along f : C -> D, pointwise over d: the
// classes of the tensor product of v with the restriction of hom_D(d, -)
// along f (a presheaf on C^op), with a : d' -> d acting on the right factor
// by precomposition, q |-> aq.
class LanPresheaf {
public:
  const Presheaf& presheaf() const { return presheaf_; }

  const TensorProduct& tensor_at(int d) const { return tensors_[d]; }
  const TensorProduct& tensor_at(const std::string& d) const {
    return tensors_[presheaf_.base().object_index(d)];
  }

  // The tensor class encoded by element e over object d.
  int class_of_element(int d, int e) const { return class_of_element_[d][e]; }
  int element_of_class(int d, int cls) const { return element_of_class_[d][cls]; }

private:
  friend LanPresheaf lan(const FinFunctor& f, const Presheaf& v, Check check);

  Presheaf presheaf_;
  std::vector<TensorProduct> tensors_;
  std::vector<std::vector<int>> class_of_element_;
  std::vector<std::vector<int>> element_of_class_;
};

LanPresheaf lan(const FinFunctor& f, const Presheaf& v, Check check = Check::checked);

// Functoriality of lan in v, classwise via tensor_on_mor.
NatTrans lan_map(const FinFunctor& f, const NatTrans& t, Check check = Check::checked);

// Unit of the adjunction (lan left adjoint to restriction): for v on C,
// the transformation v -> restrict(f, lan(f, v)) sending x over c to the
// class of (c, x, identity of f c).
NatTrans lan_unit(const FinFunctor& f, const Presheaf& v, Check check = Check::checked);

// Counit: for u on D, the transformation lan(f, restrict(f, u)) -> u
// evaluating a class with representative (c, p, q : d -> f c) to
// action(q)(p). Checked mode verifies the value is constant on classes via
// the universal property.
NatTrans lan_counit(const FinFunctor& f, const Presheaf& u, Check check = Check::checked);

// Both triangle identities for the (lan, restrict) adjunction.
TriangleReport lan_triangles(const FinFunctor& f, const Presheaf& u, const Presheaf& v,
                             Check check = Check::checked);

}  // namespace finkan
