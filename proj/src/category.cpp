#include "finkan/category.hpp"

#include <algorithm>
#include <set>

namespace finkan {

const char* to_string(Error::Code code) {
  switch (code) {
    case Error::Code::missing_identity: return "MissingIdentity";
    case Error::Code::identity_law_violation: return "IdentityLawViolation";
    case Error::Code::composition_domain_error: return "CompositionDomainError";
    case Error::Code::source_target_mismatch: return "SourceTargetMismatch";
    case Error::Code::associativity_violation: return "AssociativityViolation";
    case Error::Code::unknown_object: return "UnknownObject";
    case Error::Code::unknown_morphism: return "UnknownMorphism";
    case Error::Code::identity_not_preserved: return "IdentityNotPreserved";
    case Error::Code::composition_not_preserved: return "CompositionNotPreserved";
    case Error::Code::source_target_not_preserved: return "SourceTargetNotPreserved";
    case Error::Code::identity_action_violation: return "IdentityActionViolation";
    case Error::Code::functoriality_violation: return "FunctorialityViolation";
    case Error::Code::ill_typed_action: return "IllTypedAction";
    case Error::Code::naturality_violation: return "NaturalityViolation";
    case Error::Code::base_mismatch: return "BaseMismatch";
    case Error::Code::composition_mismatch: return "CompositionMismatch";
    case Error::Code::not_coequalizing: return "NotCoequalizing";
    case Error::Code::parse_error: return "ParseError";
    case Error::Code::semantic_error: return "SemanticError";
    case Error::Code::generation_exhausted: return "GenerationExhausted";
    case Error::Code::internal_error: return "InternalError";
  }
  return "UnknownError";
}

int FinCategory::object_index(const std::string& label) const {
  if (auto i = find_object(label)) return *i;
  throw Error(Error::Code::unknown_object, "unknown object '" + label + "'", {label});
}

int FinCategory::morphism_index(const std::string& label) const {
  if (auto i = find_morphism(label)) return *i;
  throw Error(Error::Code::unknown_morphism, "unknown morphism '" + label + "'", {label});
}

std::optional<int> FinCategory::find_object(const std::string& label) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), label);
  if (it != objects_.end() && *it == label)
    return static_cast<int>(it - objects_.begin());
  return std::nullopt;
}

std::optional<int> FinCategory::find_morphism(const std::string& label) const {
  auto it = std::lower_bound(morphisms_.begin(), morphisms_.end(), label);
  if (it != morphisms_.end() && *it == label)
    return static_cast<int>(it - morphisms_.begin());
  return std::nullopt;
}

std::vector<int> FinCategory::hom(int x, int y) const {
  std::vector<int> out;
  for (int m = 0; m < morphism_count(); ++m)
    if (src_[m] == x && tgt_[m] == y) out.push_back(m);
  return out;
}

CategoryData FinCategory::data() const {
  CategoryData raw;
  raw.objects = objects_;
  for (int m = 0; m < morphism_count(); ++m)
    raw.morphisms.push_back({morphisms_[m], objects_[src_[m]], objects_[tgt_[m]]});
  for (int c = 0; c < object_count(); ++c)
    raw.identity[objects_[c]] = morphisms_[identity_[c]];
  for (int a = 0; a < morphism_count(); ++a)
    for (int b = 0; b < morphism_count(); ++b)
      if (int ab = compose(a, b); ab >= 0)
        raw.compose[{morphisms_[a], morphisms_[b]}] = morphisms_[ab];
  return raw;
}

namespace {

void check_label(const std::string& label, const char* what) {
  if (label.empty())
    throw Error(Error::Code::semantic_error, std::string(what) + " label must be nonempty");
  if (label.find('|') != std::string::npos)
    throw Error(Error::Code::semantic_error,
                std::string(what) + " label '" + label + "' must not contain '|'", {label});
}

}  // namespace

FinCategory validate_category(const CategoryData& raw) {
  FinCategory cat;

  // Objects: nonempty, distinct labels; canonical order is sorted.
  cat.objects_ = raw.objects;
  std::sort(cat.objects_.begin(), cat.objects_.end());
  for (const auto& label : cat.objects_) check_label(label, "object");
  if (std::adjacent_find(cat.objects_.begin(), cat.objects_.end()) != cat.objects_.end())
    throw Error(Error::Code::semantic_error, "duplicate object label");

  // Morphisms: distinct labels, known endpoints.
  std::vector<MorRecord> mors = raw.morphisms;
  std::sort(mors.begin(), mors.end(),
            [](const MorRecord& l, const MorRecord& r) { return l.id < r.id; });
  for (size_t i = 0; i + 1 < mors.size(); ++i)
    if (mors[i].id == mors[i + 1].id)
      throw Error(Error::Code::semantic_error, "duplicate morphism label '" + mors[i].id + "'",
                  {mors[i].id});
  for (const auto& m : mors) {
    check_label(m.id, "morphism");
    cat.morphisms_.push_back(m.id);
  }
  for (const auto& m : mors) {
    auto s = cat.find_object(m.src);
    if (!s)
      throw Error(Error::Code::unknown_object,
                  "morphism '" + m.id + "' has unknown source '" + m.src + "'", {m.id, m.src});
    auto t = cat.find_object(m.tgt);
    if (!t)
      throw Error(Error::Code::unknown_object,
                  "morphism '" + m.id + "' has unknown target '" + m.tgt + "'", {m.id, m.tgt});
    cat.src_.push_back(*s);
    cat.tgt_.push_back(*t);
  }

  const int n_obj = cat.object_count();
  const int n_mor = cat.morphism_count();

  // Identity assignment: every object has one, and it is a loop at that object.
  cat.identity_.assign(n_obj, -1);
  for (const auto& [obj, mor] : raw.identity) {
    auto co = cat.find_object(obj);
    if (!co)
      throw Error(Error::Code::unknown_object, "identity entry for unknown object '" + obj + "'",
                  {obj});
    int c = *co;
    auto m = cat.find_morphism(mor);
    if (!m)
      throw Error(Error::Code::unknown_morphism,
                  "identity of '" + obj + "' is unknown morphism '" + mor + "'", {obj, mor});
    cat.identity_[c] = *m;
  }
  for (int c = 0; c < n_obj; ++c) {
    if (cat.identity_[c] < 0)
      throw Error(Error::Code::missing_identity,
                  "object '" + cat.objects_[c] + "' has no identity morphism", {cat.objects_[c]});
    int id = cat.identity_[c];
    if (cat.src_[id] != c || cat.tgt_[id] != c)
      throw Error(Error::Code::missing_identity,
                  "identity of '" + cat.objects_[c] + "' is '" + cat.morphisms_[id] +
                      "', which is not a loop at it",
                  {cat.objects_[c], cat.morphisms_[id]});
  }

  // Composition table: defined exactly on composable pairs, values known.
  cat.table_.assign(static_cast<size_t>(n_mor) * n_mor, -1);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [pair, value] : raw.compose) {
    const auto& [la, lb] = pair;
    auto a = cat.find_morphism(la);
    if (!a)
      throw Error(Error::Code::unknown_morphism,
                  "composition entry for unknown morphism '" + la + "'", {la});
    auto b = cat.find_morphism(lb);
    if (!b)
      throw Error(Error::Code::unknown_morphism,
                  "composition entry for unknown morphism '" + lb + "'", {lb});
    auto v = cat.find_morphism(value);
    if (!v)
      throw Error(Error::Code::unknown_morphism,
                  "composite of ('" + la + "', '" + lb + "') is unknown morphism '" + value + "'",
                  {la, lb, value});
    if (cat.tgt_[*a] != cat.src_[*b])
      throw Error(Error::Code::composition_domain_error,
                  "composite declared for non-composable pair ('" + la + "', '" + lb + "')",
                  {la, lb});
    cat.table_[*a * n_mor + *b] = *v;
  }
  for (int a = 0; a < n_mor; ++a)
    for (int b = 0; b < n_mor; ++b)
      if (cat.tgt_[a] == cat.src_[b] && cat.table_[a * n_mor + b] < 0)
        throw Error(Error::Code::composition_domain_error,
                    "composable pair ('" + cat.morphisms_[a] + "', '" + cat.morphisms_[b] +
                        "') has no composite",
                    {cat.morphisms_[a], cat.morphisms_[b]});

  // Source/target of composites: src(ab) = src(a), tgt(ab) = tgt(b).
  for (int a = 0; a < n_mor; ++a)
    for (int b = 0; b < n_mor; ++b) {
      int ab = cat.table_[a * n_mor + b];
      if (ab < 0) continue;
      if (cat.src_[ab] != cat.src_[a] || cat.tgt_[ab] != cat.tgt_[b])
        throw Error(Error::Code::source_target_mismatch,
                    "composite of ('" + cat.morphisms_[a] + "', '" + cat.morphisms_[b] +
                        "') is '" + cat.morphisms_[ab] + "', whose endpoints do not match",
                    {cat.morphisms_[a], cat.morphisms_[b], cat.morphisms_[ab]});
    }

  // Identity laws: 1_src(a) a = a = a 1_tgt(a).
  for (int a = 0; a < n_mor; ++a) {
    int l = cat.table_[cat.identity_[cat.src_[a]] * n_mor + a];
    int r = cat.table_[a * n_mor + cat.identity_[cat.tgt_[a]]];
    if (l != a || r != a)
      throw Error(Error::Code::identity_law_violation,
                  "identity law fails at morphism '" + cat.morphisms_[a] + "'",
                  {cat.morphisms_[a]});
  }

  // Associativity: (ab)c = a(bc) for every composable triple.
  for (int a = 0; a < n_mor; ++a)
    for (int b = 0; b < n_mor; ++b) {
      int ab = cat.table_[a * n_mor + b];
      if (ab < 0) continue;
      for (int c = 0; c < n_mor; ++c) {
        if (cat.tgt_[b] != cat.src_[c]) continue;
        int bc = cat.table_[b * n_mor + c];
        if (cat.table_[ab * n_mor + c] != cat.table_[a * n_mor + bc])
          throw Error(Error::Code::associativity_violation,
                      "associativity fails on ('" + cat.morphisms_[a] + "', '" +
                          cat.morphisms_[b] + "', '" + cat.morphisms_[c] + "')",
                      {cat.morphisms_[a], cat.morphisms_[b], cat.morphisms_[c]});
      }
    }

  return cat;
}

FinCategory opposite(const FinCategory& c) {
  CategoryData raw = c.data();
  CategoryData flipped;
  flipped.objects = raw.objects;
  for (const auto& m : raw.morphisms) flipped.morphisms.push_back({m.id, m.tgt, m.src});
  flipped.identity = raw.identity;
  for (const auto& [pair, value] : raw.compose)
    flipped.compose[{pair.second, pair.first}] = value;
  return validate_category(flipped);
}

std::vector<std::string> hom_set(const FinCategory& c, const std::string& x,
                                 const std::string& y) {
  std::vector<std::string> out;
  for (int m : c.hom(c.object_index(x), c.object_index(y))) out.push_back(c.morphism(m));
  return out;
}

}  // namespace finkan
