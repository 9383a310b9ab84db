#include "doctest.h"

#include "common.hpp"

using namespace finkan;

namespace {

const std::string kFamilyZX = R"({"0":{"id*":"z"},"1":{"id*":"x"}})";
const std::string kFamilyZY = R"({"0":{"id*":"z"},"1":{"id*":"y"}})";

bool componentwise_bijective(const NatTrans& t) {
  for (int c = 0; c < t.base().object_count(); ++c) {
    if (t.source().at(c).size() != t.target().at(c).size()) return false;
    std::vector<bool> hit(t.target().at(c).size(), false);
    for (int e = 0; e < static_cast<int>(t.source().at(c).size()); ++e) {
      int image = t.component(c, e);
      if (hit[image]) return false;
      hit[image] = true;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("right Kan extension along the terminal collapse has the limit fibers") {
  RanPresheaf r = ran(fx::bang(), fx::v());
  const Presheaf& p = r.presheaf();
  CHECK(p.base() == fx::cat1());
  REQUIRE(p.at("*").size() == 2);
  CHECK(p.at("*")[0] == kFamilyZX);
  CHECK(p.at("*")[1] == kFamilyZY);
  CHECK(p.action_map("id*").image_of(kFamilyZX) == kFamilyZX);

  // Decoding returns the transformation the label describes.
  const NatTrans& t = r.decode("*", kFamilyZX);
  CHECK(nat_component_label(t) == kFamilyZX);
  CHECK(t.target() == fx::v());
}

TEST_CASE("right Kan along a full and faithful inclusion") {
  Presheaf p = constant_presheaf(fx::cat1(), {"p", "q"});
  RanPresheaf r = ran(fx::inc1(), p);
  // Over 1 the fiber is p(*); over 0 it is a single family (the empty
  // transformation out of an empty restricted representable).
  CHECK(r.presheaf().at("1").size() == 2);
  CHECK(r.presheaf().at("0").size() == 1);

  // The counit restrict(ran p) -> p is an isomorphism here.
  CHECK(componentwise_bijective(ran_counit(fx::inc1(), p)));
}

TEST_CASE("unit and counit have the adjunction endpoints") {
  FinFunctor b = fx::bang();
  Presheaf u = constant_presheaf(fx::cat1(), {"p", "q"});
  Presheaf v = fx::v();

  NatTrans unit = ran_unit(b, u);
  CHECK(unit.source() == u);
  CHECK(unit.target() == ran(b, restrict_presheaf(b, u)).presheaf());

  NatTrans counit = ran_counit(b, v);
  CHECK(counit.source() == restrict_presheaf(b, ran(b, v).presheaf()));
  CHECK(counit.target() == v);

  // The counit evaluates a family at the identity.
  CHECK(counit.component_map("1").image_of(kFamilyZX) == "x");
  CHECK(counit.component_map("1").image_of(kFamilyZY) == "y");
  CHECK(counit.component_map("0").image_of(kFamilyZX) == "z");
}

TEST_CASE("triangle identities hold for the fixture functors") {
  FinCategory c1 = fx::cat1();
  FinCategory c2 = fx::cat2();
  Presheaf v = fx::v();

  SUBCASE("identity functor") {
    TriangleReport rep = ran_triangles(identity_functor(c2), v, v);
    CHECK(rep.ok());
  }
  SUBCASE("terminal collapse") {
    Presheaf u = constant_presheaf(c1, {"p", "q"});
    TriangleReport rep = ran_triangles(fx::bang(), u, v);
    for (const TriangleFailure& f : rep.failures)
      MESSAGE(f.triangle, " at ", f.object, "/", f.element, ": ", f.detail);
    CHECK(rep.ok());
  }
  SUBCASE("full inclusion") {
    Presheaf u = fx::v();
    Presheaf w = constant_presheaf(c1, {"p", "q"});
    CHECK(ran_triangles(fx::inc1(), u, w).ok());
  }
  SUBCASE("generated functors and presheaves") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      GenBounds b{3, 8, 2, seed};
      FinCategory c = gen_category(b);
      FinCategory d = gen_category({3, 8, 2, seed + 50});
      FinFunctor f = gen_functor(b, c, d);
      Presheaf u = gen_presheaf({3, 8, 2, seed + 10}, d);
      Presheaf w = gen_presheaf({3, 8, 2, seed + 20}, c);
      CAPTURE(seed);
      CHECK(ran_triangles(f, u, w).ok());
    }
  }
}

TEST_CASE("ran is functorial in the presheaf") {
  FinFunctor b = fx::bang();
  Presheaf v = fx::v();
  std::map<std::string, std::map<std::string, std::string>> swap = {
      {"0", {{"z", "z"}}}, {"1", {{"x", "y"}, {"y", "x"}}}};
  NatTrans t = validate_nattrans(v, v, swap);

  NatTrans rt = ran_map(b, t);
  CHECK(rt.source() == ran(b, v).presheaf());
  // The swap exchanges the two families.
  CHECK(rt.component_map("*").image_of(kFamilyZX) == kFamilyZY);

  CHECK(ran_map(b, id_nat(v)) == id_nat(ran(b, v).presheaf()));
  CHECK(compose_nat(ran_map(b, t), ran_map(b, t)) == ran_map(b, compose_nat(t, t)));
}

TEST_CASE("checked and unchecked modes agree") {
  FinFunctor b = fx::bang();
  Presheaf v = fx::v();
  CHECK(ran(b, v, Check::unchecked).presheaf() == ran(b, v, Check::checked).presheaf());
  CHECK(ran_counit(b, v, Check::unchecked) == ran_counit(b, v, Check::checked));
  Presheaf u = constant_presheaf(fx::cat1(), {"p", "q"});
  CHECK(ran_unit(b, u, Check::unchecked) == ran_unit(b, u, Check::checked));
}

TEST_CASE("ran along the terminal functor computes the limit") {
  std::vector<Presheaf> probes = {fx::v(), fx::one(fx::cat2()), fx::empty(fx::cat2()),
                                  yoneda_obj(fx::cat2(), "0"), yoneda_obj(fx::cat2(), "1")};
  for (size_t i = 0; i < probes.size(); ++i) {
    CAPTURE(i);
    const Presheaf& v = probes[i];
    FinFunctor to_terminal = functor_to_terminal(v.base());
    RanPresheaf r = ran(to_terminal, v);
    auto families = oracle_limit(v);
    REQUIRE(r.presheaf().at(0).size() == families.size());
    // Each element decodes to a compatible family; collect and compare.
    std::vector<std::vector<std::string>> decoded;
    for (int e = 0; e < static_cast<int>(r.presheaf().at(0).size()); ++e) {
      const NatTrans& t = r.decode(0, e);
      std::vector<std::string> family;
      for (int c = 0; c < v.base().object_count(); ++c) {
        REQUIRE(t.source().at(c).size() == 1);  // restricted representable is a point
        family.push_back(v.at(c)[t.component(c, 0)]);
      }
      decoded.push_back(family);
    }
    std::sort(decoded.begin(), decoded.end());
    CHECK(decoded == families);
  }

  // Frozen fixture value.
  CHECK(ran(fx::bang(), fx::v()).presheaf().at("*").size() == 2);
}
