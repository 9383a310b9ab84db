#pragma once

#include <string>

#include "finkan/checker.hpp"

// In-code copies of the fixture structures, so the core tests do not depend
// on the io module. The json files under fixtures/ hold the same data.
namespace fx {

using namespace finkan;

inline std::string path(const std::string& name) {
  return std::string(FINKAN_FIXTURE_DIR) + "/" + name;
}

// One object *, one morphism id*.
inline CategoryData cat1_data() {
  CategoryData d;
  d.objects = {"*"};
  d.morphisms = {{"id*", "*", "*"}};
  d.identity = {{"*", "id*"}};
  d.compose = {{{"id*", "id*"}, "id*"}};
  return d;
}
inline FinCategory cat1() { return validate_category(cat1_data()); }

// Two objects 0, 1 and one non-identity arrow a : 0 -> 1.
inline CategoryData cat2_data() {
  CategoryData d;
  d.objects = {"0", "1"};
  d.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"a", "0", "1"}};
  d.identity = {{"0", "id0"}, {"1", "id1"}};
  d.compose = {{{"id0", "id0"}, "id0"},
               {{"id1", "id1"}, "id1"},
               {{"id0", "a"}, "a"},
               {{"a", "id1"}, "a"}};
  return d;
}
inline FinCategory cat2() { return validate_category(cat2_data()); }

// One object c with an involution e (e then e = i).
inline FinCategory loop2() {
  CategoryData d;
  d.objects = {"c"};
  d.morphisms = {{"i", "c", "c"}, {"e", "c", "c"}};
  d.identity = {{"c", "i"}};
  d.compose = {{{"i", "i"}, "i"}, {{"i", "e"}, "e"}, {{"e", "i"}, "e"}, {{"e", "e"}, "i"}};
  return validate_category(d);
}

// One object c with a 3-cycle: g then g = h, g then h = i.
inline FinCategory loop3() {
  CategoryData d;
  d.objects = {"c"};
  d.morphisms = {{"i", "c", "c"}, {"g", "c", "c"}, {"h", "c", "c"}};
  d.identity = {{"c", "i"}};
  d.compose = {{{"i", "i"}, "i"}, {{"i", "g"}, "g"}, {{"i", "h"}, "h"},
               {{"g", "i"}, "g"}, {{"g", "g"}, "h"}, {{"g", "h"}, "i"},
               {{"h", "i"}, "h"}, {{"h", "g"}, "i"}, {{"h", "h"}, "g"}};
  return validate_category(d);
}

// One object c with a nilpotent e and an absorbing f: every composite of
// non-identities is f.
inline CategoryData absorb_data() {
  CategoryData d;
  d.objects = {"c"};
  d.morphisms = {{"i", "c", "c"}, {"e", "c", "c"}, {"f", "c", "c"}};
  d.identity = {{"c", "i"}};
  d.compose = {{{"i", "i"}, "i"}, {{"i", "e"}, "e"}, {{"i", "f"}, "f"},
               {{"e", "i"}, "e"}, {{"e", "e"}, "f"}, {{"e", "f"}, "f"},
               {{"f", "i"}, "f"}, {{"f", "e"}, "f"}, {{"f", "f"}, "f"}};
  return d;
}

// V(0) = {z}, V(1) = {x, y}, a acting by x, y |-> z.
inline PresheafData v_data() {
  PresheafData d;
  d.elements = {{"0", {"z"}}, {"1", {"x", "y"}}};
  d.action = {{"id0", {{"z", "z"}}},
              {"id1", {{"x", "x"}, {"y", "y"}}},
              {"a", {{"x", "z"}, {"y", "z"}}}};
  return d;
}
inline Presheaf v() { return validate_presheaf(cat2(), v_data()); }

// The unique functor cat2 -> cat1.
inline FinFunctor bang() {
  FunctorData d;
  d.obj_map = {{"0", "*"}, {"1", "*"}};
  d.mor_map = {{"id0", "id*"}, {"id1", "id*"}, {"a", "id*"}};
  return validate_functor(cat2(), cat1(), d);
}

// The full embedding cat1 -> cat2 picking out the object 1.
inline FinFunctor inc1() {
  FunctorData d;
  d.obj_map = {{"*", "1"}};
  d.mor_map = {{"id*", "id1"}};
  return validate_functor(cat1(), cat2(), d);
}

inline Presheaf one(const FinCategory& base) { return constant_presheaf(base, {"s"}); }
inline Presheaf empty(const FinCategory& base) { return constant_presheaf(base, {}); }

}  // namespace fx
