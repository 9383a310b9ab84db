#include "doctest.h"

#include <set>

#include "common.hpp"
#include "oracles.hpp"

using namespace finkan;

TEST_CASE("naturality is verified on every morphism") {
  Presheaf v = fx::v();
  std::map<std::string, std::map<std::string, std::string>> ident = {
      {"0", {{"z", "z"}}}, {"1", {{"x", "x"}, {"y", "y"}}}};
  NatTrans t = validate_nattrans(v, v, ident);
  CHECK(t == id_nat(v));

  // Swapping x and y is natural here because a sends both to z.
  std::map<std::string, std::map<std::string, std::string>> swap = {
      {"0", {{"z", "z"}}}, {"1", {{"x", "y"}, {"y", "x"}}}};
  CHECK_NOTHROW(validate_nattrans(v, v, swap));

  // On a presheaf where the action separates elements, the swap fails.
  FinCategory c2 = fx::cat2();
  PresheafData wd;
  wd.elements = {{"0", {"z0", "z1"}}, {"1", {"w"}}};
  wd.action = {{"id0", {{"z0", "z0"}, {"z1", "z1"}}},
               {"id1", {{"w", "w"}}},
               {"a", {{"w", "z0"}}}};
  Presheaf w = validate_presheaf(c2, wd);
  std::map<std::string, std::map<std::string, std::string>> bad = {
      {"0", {{"z0", "z1"}, {"z1", "z1"}}}, {"1", {{"w", "w"}}}};
  try {
    validate_nattrans(w, w, bad);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Error::Code::naturality_violation);
  }
}

TEST_CASE("validation rejects mismatched bases and partial tables") {
  Presheaf v = fx::v();
  Presheaf one1 = fx::one(fx::cat1());
  CHECK_THROWS_AS(NatTrans::from_components(v, one1, {}, Check::checked), Error);

  std::map<std::string, std::map<std::string, std::string>> partial = {
      {"0", {{"z", "z"}}}, {"1", {{"x", "x"}}}};  // y missing
  CHECK_THROWS_AS(validate_nattrans(v, v, partial), Error);
}

TEST_CASE("composition is diagrammatic and has identities") {
  Presheaf v = fx::v();
  std::vector<NatTrans> all = enumerate_nat(v, v);
  for (const NatTrans& t : all) {
    CHECK(compose_nat(id_nat(v), t) == t);
    CHECK(compose_nat(t, id_nat(v)) == t);
  }

  // Middle endpoints must agree.
  Presheaf one = fx::one(fx::cat2());
  NatTrans to_one = enumerate_nat(v, one).at(0);
  CHECK_NOTHROW(compose_nat(to_one, id_nat(one)));
  try {
    compose_nat(to_one, id_nat(v));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Error::Code::composition_mismatch);
  }
}

TEST_CASE("enumeration matches the fixture counts") {
  Presheaf v = fx::v();
  FinCategory c2 = fx::cat2();
  Presheaf one = fx::one(c2);
  Presheaf empty = fx::empty(c2);
  CHECK(enumerate_nat(v, v).size() == 4);
  CHECK(enumerate_nat(yoneda_obj(c2, "1"), v).size() == 2);  // = |v(1)|
  CHECK(enumerate_nat(yoneda_obj(c2, "0"), v).size() == 1);  // = |v(0)|
  CHECK(enumerate_nat(one, v).size() == 2);
  CHECK(enumerate_nat(v, one).size() == 1);
  CHECK(enumerate_nat(empty, v).size() == 1);  // the empty transformation
  CHECK(enumerate_nat(v, empty).empty());
  CHECK(enumerate_nat(empty, empty).size() == 1);
}

TEST_CASE("enumeration agrees exactly with unpruned brute force") {
  FinCategory c2 = fx::cat2();
  FinCategory l2 = fx::loop2();
  FinCategory l3 = fx::loop3();

  std::vector<std::pair<Presheaf, Presheaf>> cases;
  Presheaf v = fx::v();
  cases.push_back({v, v});
  cases.push_back({yoneda_obj(c2, "1"), v});
  cases.push_back({fx::one(c2), v});
  cases.push_back({v, fx::one(c2)});
  cases.push_back({yoneda_obj(l2, "c"), yoneda_obj(l2, "c")});
  cases.push_back({yoneda_obj(l3, "c"), yoneda_obj(l3, "c")});
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GenBounds b;
    b.seed = seed;
    b.max_elements = 2;
    FinCategory base = (seed % 2 == 0) ? c2 : gen_category(b);
    cases.push_back({gen_presheaf(b, base), gen_presheaf({3, 8, 2, seed + 100}, base)});
  }

  for (size_t i = 0; i < cases.size(); ++i) {
    CAPTURE(i);
    std::vector<NatTrans> fast = enumerate_nat(cases[i].first, cases[i].second);
    std::vector<std::string> fast_labels;
    for (const NatTrans& t : fast) fast_labels.push_back(nat_component_label(t));
    std::vector<std::string> sorted = fast_labels;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == oracle::unpruned_nat_labels(cases[i].first, cases[i].second));
  }
}

TEST_CASE("enumeration order is canonical and closed under composition") {
  Presheaf v = fx::v();
  std::vector<NatTrans> all = enumerate_nat(v, v);
  std::vector<std::string> labels;
  for (const NatTrans& t : all) labels.push_back(nat_component_label(t));
  for (size_t i = 0; i + 1 < labels.size(); ++i) CHECK(labels[i] < labels[i + 1]);

  std::set<std::string> pool(labels.begin(), labels.end());
  CHECK(pool.count(nat_component_label(id_nat(v))) == 1);
  for (const NatTrans& s : all)
    for (const NatTrans& t : all)
      CHECK(pool.count(nat_component_label(compose_nat(s, t))) == 1);
}

TEST_CASE("component labels cover every object of the base") {
  CHECK(nat_component_label(id_nat(fx::v())) ==
        R"({"0":{"z":"z"},"1":{"x":"x","y":"y"}})");
  // Objects with empty fibers still appear.
  FinCategory c2 = fx::cat2();
  CHECK(nat_component_label(id_nat(yoneda_obj(c2, "0"))) == R"({"0":{"id0":"id0"},"1":{}})");
}
