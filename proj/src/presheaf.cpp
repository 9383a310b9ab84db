#include "finkan/presheaf.hpp"

#include <algorithm>
#include <numeric>

namespace finkan {

const std::string& SetMap::image_of(const std::string& x) const {
  auto it = std::find(domain.begin(), domain.end(), x);
  if (it == domain.end())
    throw Error(Error::Code::semantic_error, "element '" + x + "' not in domain", {x});
  return codomain[assignment[it - domain.begin()]];
}

int Presheaf::element_index(int c, const std::string& label) const {
  const auto& elems = elements_[c];
  auto it = std::lower_bound(elems.begin(), elems.end(), label);
  if (it == elems.end() || *it != label)
    throw Error(Error::Code::semantic_error,
                "no element '" + label + "' over object '" + base_.object(c) + "'",
                {base_.object(c), label});
  return static_cast<int>(it - elems.begin());
}

SetMap Presheaf::action_map(int m) const {
  return SetMap{elements_[base_.tgt(m)], elements_[base_.src(m)], action_[m]};
}

int Presheaf::total_elements() const {
  int n = 0;
  for (const auto& e : elements_) n += static_cast<int>(e.size());
  return n;
}

PresheafData Presheaf::data() const {
  PresheafData raw;
  for (int c = 0; c < base_.object_count(); ++c) raw.elements[base_.object(c)] = elements_[c];
  for (int m = 0; m < base_.morphism_count(); ++m) {
    auto& table = raw.action[base_.morphism(m)];
    const auto& dom = elements_[base_.tgt(m)];
    const auto& cod = elements_[base_.src(m)];
    for (size_t e = 0; e < dom.size(); ++e) table[dom[e]] = cod[action_[m][e]];
  }
  return raw;
}

namespace {

void check_laws(const Presheaf& p) {
  const FinCategory& base = p.base();
  for (int c = 0; c < base.object_count(); ++c) {
    int id = base.identity(c);
    for (int e = 0; e < static_cast<int>(p.at(c).size()); ++e)
      if (p.action(id, e) != e)
        throw Error(Error::Code::identity_action_violation,
                    "identity of '" + base.object(c) + "' acts nontrivially on element '" +
                        p.at(c)[e] + "'",
                    {base.object(c), p.at(c)[e]});
  }
  // action(ab) = action(b) then action(a), checked on every composable pair.
  for (int a = 0; a < base.morphism_count(); ++a)
    for (int b = 0; b < base.morphism_count(); ++b) {
      int ab = base.compose(a, b);
      if (ab < 0) continue;
      for (int e = 0; e < static_cast<int>(p.at(base.tgt(b)).size()); ++e)
        if (p.action(ab, e) != p.action(a, p.action(b, e)))
          throw Error(Error::Code::functoriality_violation,
                      "functoriality fails on ('" + base.morphism(a) + "', '" +
                          base.morphism(b) + "') at element '" + p.at(base.tgt(b))[e] + "'",
                      {base.morphism(a), base.morphism(b), p.at(base.tgt(b))[e]});
    }
}

}  // namespace

Presheaf Presheaf::from_parts(FinCategory base, std::vector<std::vector<std::string>> elements,
                              std::vector<std::vector<int>> action, Check check) {
  const int n_obj = base.object_count();
  const int n_mor = base.morphism_count();
  if (static_cast<int>(elements.size()) != n_obj || static_cast<int>(action.size()) != n_mor)
    throw Error(Error::Code::internal_error, "presheaf parts have the wrong shape");

  // Sort each element list into canonical label order, remembering where
  // each old position went.
  std::vector<std::vector<int>> perm(n_obj);  // perm[c][old] = new
  for (int c = 0; c < n_obj; ++c) {
    auto& elems = elements[c];
    std::vector<int> order(elems.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int l, int r) { return elems[l] < elems[r]; });
    std::vector<std::string> sorted;
    perm[c].assign(elems.size(), -1);
    for (size_t pos = 0; pos < order.size(); ++pos) {
      sorted.push_back(elems[order[pos]]);
      perm[c][order[pos]] = static_cast<int>(pos);
    }
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i] == sorted[i + 1])
        throw Error(Error::Code::semantic_error,
                    "duplicate element label '" + sorted[i] + "' over object '" + base.object(c) +
                        "'",
                    {base.object(c), sorted[i]});
    elems = std::move(sorted);
  }

  Presheaf p;
  p.elements_ = std::move(elements);
  p.action_.assign(n_mor, {});
  for (int m = 0; m < n_mor; ++m) {
    const int ct = base.tgt(m), cs = base.src(m);
    const auto& old = action[m];
    if (old.size() != p.elements_[ct].size())
      throw Error(Error::Code::ill_typed_action,
                  "action of '" + base.morphism(m) + "' is not total", {base.morphism(m)});
    p.action_[m].assign(old.size(), -1);
    for (size_t e = 0; e < old.size(); ++e) {
      if (old[e] < 0 || old[e] >= static_cast<int>(p.elements_[cs].size()))
        throw Error(Error::Code::ill_typed_action,
                    "action of '" + base.morphism(m) + "' lands outside its codomain",
                    {base.morphism(m)});
      p.action_[m][perm[ct][e]] = perm[cs][old[e]];
    }
  }
  p.base_ = std::move(base);

  if (check == Check::checked) check_laws(p);
  return p;
}

Presheaf validate_presheaf(const FinCategory& base, const PresheafData& raw) {
  std::vector<std::vector<std::string>> elements(base.object_count());
  for (const auto& [obj, elems] : raw.elements) {
    auto c = base.find_object(obj);
    if (!c)
      throw Error(Error::Code::semantic_error,
                  "elements listed for unknown object '" + obj + "'", {obj});
    elements[*c] = elems;
    for (const auto& label : elements[*c])
      if (label.empty())
        throw Error(Error::Code::semantic_error,
                    "empty element label over object '" + obj + "'", {obj});
  }

  // Resolve the string-keyed structure maps against the (sorted) element
  // lists. Sorting happens in from_parts; resolve against sorted copies here.
  std::vector<std::vector<std::string>> sorted = elements;
  for (auto& elems : sorted) std::sort(elems.begin(), elems.end());

  auto elem_index = [&](int c, const std::string& label) -> int {
    const auto& elems = sorted[c];
    auto it = std::lower_bound(elems.begin(), elems.end(), label);
    if (it == elems.end() || *it != label) return -1;
    return static_cast<int>(it - elems.begin());
  };

  for (const auto& [mor, table] : raw.action) {
    (void)table;
    if (!base.find_morphism(mor))
      throw Error(Error::Code::semantic_error,
                  "action listed for unknown morphism '" + mor + "'", {mor});
  }

  std::vector<std::vector<int>> action(base.morphism_count());
  for (int m = 0; m < base.morphism_count(); ++m) {
    const std::string& mor = base.morphism(m);
    const int ct = base.tgt(m), cs = base.src(m);
    auto it = raw.action.find(mor);
    const std::map<std::string, std::string> empty;
    const auto& table = it == raw.action.end() ? empty : it->second;
    if (!sorted[ct].empty() && it == raw.action.end())
      throw Error(Error::Code::ill_typed_action,
                  "no action table for morphism '" + mor + "'", {mor});
    action[m].assign(sorted[ct].size(), -1);
    for (const auto& [from, to] : table) {
      int e = elem_index(ct, from);
      if (e < 0)
        throw Error(Error::Code::ill_typed_action,
                    "action of '" + mor + "' defined on '" + from +
                        "', which is not an element over its target '" + base.object(ct) + "'",
                    {mor, from});
      int img = elem_index(cs, to);
      if (img < 0)
        throw Error(Error::Code::ill_typed_action,
                    "action of '" + mor + "' sends '" + from + "' to '" + to +
                        "', which is not an element over its source '" + base.object(cs) + "'",
                    {mor, from, to});
      action[m][e] = img;
    }
    for (size_t e = 0; e < action[m].size(); ++e)
      if (action[m][e] < 0)
        throw Error(Error::Code::ill_typed_action,
                    "action of '" + mor + "' is undefined on element '" + sorted[ct][e] + "'",
                    {mor, sorted[ct][e]});
  }

  return Presheaf::from_parts(base, std::move(sorted), std::move(action), Check::checked);
}

Presheaf constant_presheaf(const FinCategory& base, const std::vector<std::string>& labels) {
  std::vector<std::vector<std::string>> elements(base.object_count(), labels);
  std::vector<std::vector<int>> action(base.morphism_count());
  for (auto& a : action) {
    a.resize(labels.size());
    std::iota(a.begin(), a.end(), 0);
  }
  return Presheaf::from_parts(base, std::move(elements), std::move(action), Check::checked);
}

}  // namespace finkan
