#include "finkan/left_kan.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace finkan {

namespace {

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

void compare_with_identity(const NatTrans& t, const char* triangle, TriangleReport& report) {
  const FinCategory& base = t.base();
  for (int c = 0; c < base.object_count(); ++c)
    for (int e = 0; e < static_cast<int>(t.source().at(c).size()); ++e)
      if (t.component(c, e) != e)
        report.failures.push_back(
            {triangle, base.object(c), t.source().at(c)[e],
             "maps to '" + t.target().at(c)[t.component(c, e)] + "' instead of itself"});
}

}  // namespace

int TensorProduct::pair_index(int obj, int left, int right) const {
  // Pairs are laid out object by object, left index major.
  int offset = 0;
  for (int c = 0; c < obj; ++c)
    offset += static_cast<int>(left_.at(c).size() * right_.at(c).size());
  return offset + left * static_cast<int>(right_.at(obj).size()) + right;
}

std::string TensorProduct::pair_label(int i) const {
  const TensorPair& p = pairs_[i];
  nlohmann::json triple = nlohmann::json::array(
      {left_.base().object(p.obj), left_.at(p.obj)[p.left], right_.at(p.obj)[p.right]});
  return triple.dump();
}

std::vector<std::vector<int>> TensorProduct::classes() const {
  std::vector<std::vector<int>> out(reps_.size());
  for (int i = 0; i < pair_count(); ++i) out[class_of_[i]].push_back(i);
  return out;
}

TensorProduct tensor(const Presheaf& v, const Presheaf& w) {
  if (!(w.base() == opposite(v.base())))
    throw Error(Error::Code::base_mismatch,
                "tensor factors must live over opposite bases");
  const FinCategory& base = v.base();

  TensorProduct t;
  t.left_ = v;
  t.right_ = w;
  for (int c = 0; c < base.object_count(); ++c)
    for (int p = 0; p < static_cast<int>(v.at(c).size()); ++p)
      for (int q = 0; q < static_cast<int>(w.at(c).size()); ++q)
        t.pairs_.push_back({c, p, q});

  std::vector<int> parent(t.pairs_.size());
  std::iota(parent.begin(), parent.end(), 0);
  // For a : c -> c', p' over c' and q over c, identify
  // (c, action_v(a)(p'), q) with (c', p', action_w(a)(q)). Note that w's
  // structure map for a runs from w(c) to w(c') because w lives on the
  // opposite base.
  for (int a = 0; a < base.morphism_count(); ++a) {
    const int c = base.src(a), cp = base.tgt(a);
    for (int pp = 0; pp < static_cast<int>(v.at(cp).size()); ++pp)
      for (int q = 0; q < static_cast<int>(w.at(c).size()); ++q) {
        int lhs = t.pair_index(c, v.action(a, pp), q);
        int rhs = t.pair_index(cp, pp, w.action(a, q));
        int rl = find_root(parent, lhs), rr = find_root(parent, rhs);
        if (rl != rr) parent[std::max(rl, rr)] = std::min(rl, rr);
      }
  }

  // Roots are now the least members of their classes; class order follows
  // representative order.
  t.class_of_.assign(t.pairs_.size(), -1);
  for (size_t i = 0; i < t.pairs_.size(); ++i) {
    int root = find_root(parent, static_cast<int>(i));
    if (root == static_cast<int>(i)) {
      t.class_of_[i] = static_cast<int>(t.reps_.size());
      t.reps_.push_back(root);
    } else {
      t.class_of_[i] = t.class_of_[root];
    }
  }
  return t;
}

std::vector<std::string> tensor_universal(const TensorProduct& t,
                                          const std::vector<std::string>& values) {
  if (values.size() != static_cast<size_t>(t.pair_count()))
    throw Error(Error::Code::semantic_error,
                "universal-property values must cover every pair exactly once");
  const Presheaf& v = t.left();
  const Presheaf& w = t.right();
  const FinCategory& base = v.base();
  for (int a = 0; a < base.morphism_count(); ++a) {
    const int c = base.src(a), cp = base.tgt(a);
    for (int pp = 0; pp < static_cast<int>(v.at(cp).size()); ++pp)
      for (int q = 0; q < static_cast<int>(w.at(c).size()); ++q) {
        const std::string& lhs = values[t.pair_index(c, v.action(a, pp), q)];
        const std::string& rhs = values[t.pair_index(cp, pp, w.action(a, q))];
        if (lhs != rhs)
          throw Error(Error::Code::not_coequalizing,
                      "values are not constant along morphism '" + base.morphism(a) +
                          "' at left element '" + v.at(cp)[pp] + "' and right element '" +
                          w.at(c)[q] + "' ('" + lhs + "' vs '" + rhs + "')",
                      {base.morphism(a), v.at(cp)[pp], w.at(c)[q]});
      }
  }
  std::vector<std::string> out;
  out.reserve(t.class_count());
  for (int cls = 0; cls < t.class_count(); ++cls) out.push_back(values[t.representative(cls)]);
  return out;
}

TensorMorphism tensor_on_mor(const NatTrans& m, const NatTrans& n) {
  TensorMorphism out;
  out.source = tensor(m.source(), n.source());
  out.target = tensor(m.target(), n.target());

  // Image class of every pair; the universal property certifies the map is
  // constant on classes before we read it off the representatives.
  std::vector<std::string> values(out.source.pair_count());
  std::vector<int> image(out.source.pair_count());
  for (int i = 0; i < out.source.pair_count(); ++i) {
    const TensorPair& p = out.source.pair(i);
    int j = out.target.pair_index(p.obj, m.component(p.obj, p.left), n.component(p.obj, p.right));
    image[i] = out.target.class_of(j);
    values[i] = out.target.class_label(image[i]);
  }
  tensor_universal(out.source, values);

  out.class_map.resize(out.source.class_count());
  for (int cls = 0; cls < out.source.class_count(); ++cls)
    out.class_map[cls] = image[out.source.representative(cls)];
  return out;
}

LanPresheaf lan(const FinFunctor& f, const Presheaf& v, Check check) {
  if (!(v.base() == f.source()))
    throw Error(Error::Code::base_mismatch,
                "left Kan extension of a presheaf not living over the functor's source");
  const FinCategory& d_cat = f.target();
  FinFunctor f_op = opposite_functor(f);

  LanPresheaf out;
  std::vector<std::vector<std::string>> elements(d_cat.object_count());
  out.class_of_element_.resize(d_cat.object_count());
  out.element_of_class_.resize(d_cat.object_count());
  for (int d = 0; d < d_cat.object_count(); ++d) {
    // The right factor at d: c |-> hom_D(d, f c), a presheaf on C^op.
    Presheaf w = restrict_presheaf(f_op, yoneda_obj(f_op.target(), d), Check::unchecked);
    out.tensors_.push_back(tensor(v, w));
    const TensorProduct& t = out.tensors_.back();

    std::vector<int> order(t.class_count());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::string> labels(t.class_count());
    for (int cls = 0; cls < t.class_count(); ++cls) labels[cls] = t.class_label(cls);
    std::sort(order.begin(), order.end(), [&](int l, int r) { return labels[l] < labels[r]; });

    out.class_of_element_[d] = order;
    out.element_of_class_[d].assign(t.class_count(), -1);
    for (int e = 0; e < t.class_count(); ++e) {
      elements[d].push_back(labels[order[e]]);
      out.element_of_class_[d][order[e]] = e;
    }
  }

  // a : d' -> d acts on the right factor by precomposition, q |-> aq.
  std::vector<std::vector<int>> action(d_cat.morphism_count());
  for (int a = 0; a < d_cat.morphism_count(); ++a) {
    const int dt = d_cat.tgt(a), ds = d_cat.src(a);
    const TensorProduct& from = out.tensors_[dt];
    const TensorProduct& to = out.tensors_[ds];

    auto image_class = [&](int i) {
      const TensorPair& p = from.pair(i);
      const std::string& q_label = from.right().at(p.obj)[p.right];
      int aq = d_cat.compose(a, d_cat.morphism_index(q_label));
      int right = to.right().element_index(p.obj, d_cat.morphism(aq));
      return to.class_of(to.pair_index(p.obj, p.left, right));
    };

    if (check == Check::checked && from.pair_count() > 0) {
      std::vector<std::string> values(from.pair_count());
      for (int i = 0; i < from.pair_count(); ++i) values[i] = to.class_label(image_class(i));
      tensor_universal(from, values);
    }

    action[a].resize(elements[dt].size());
    for (size_t e = 0; e < action[a].size(); ++e) {
      int cls = out.class_of_element_[dt][e];
      action[a][e] = out.element_of_class_[ds][image_class(from.representative(cls))];
    }
  }

  out.presheaf_ = Presheaf::from_parts(d_cat, std::move(elements), std::move(action), check);
  return out;
}

NatTrans lan_map(const FinFunctor& f, const NatTrans& t, Check check) {
  LanPresheaf lv = lan(f, t.source(), check);
  LanPresheaf lw = lan(f, t.target(), check);
  const FinCategory& d_cat = f.target();

  std::vector<std::vector<int>> components(d_cat.object_count());
  for (int d = 0; d < d_cat.object_count(); ++d) {
    const TensorProduct& from = lv.tensor_at(d);
    const TensorProduct& to = lw.tensor_at(d);

    auto image_class = [&](int i) {
      const TensorPair& p = from.pair(i);
      return to.class_of(to.pair_index(p.obj, t.component(p.obj, p.left), p.right));
    };

    if (check == Check::checked && from.pair_count() > 0) {
      std::vector<std::string> values(from.pair_count());
      for (int i = 0; i < from.pair_count(); ++i) values[i] = to.class_label(image_class(i));
      tensor_universal(from, values);
    }

    components[d].resize(lv.presheaf().at(d).size());
    for (size_t e = 0; e < components[d].size(); ++e) {
      int cls = lv.class_of_element(d, static_cast<int>(e));
      components[d][e] = lw.element_of_class(d, image_class(from.representative(cls)));
    }
  }
  return NatTrans::from_components(lv.presheaf(), lw.presheaf(), std::move(components), check);
}

NatTrans lan_unit(const FinFunctor& f, const Presheaf& v, Check check) {
  const FinCategory& c_cat = f.source();
  const FinCategory& d_cat = f.target();
  LanPresheaf l = lan(f, v, check);
  Presheaf target = restrict_presheaf(f, l.presheaf(), Check::unchecked);

  std::vector<std::vector<int>> components(c_cat.object_count());
  for (int c = 0; c < c_cat.object_count(); ++c) {
    const int fc = f.on_object(c);
    const TensorProduct& t = l.tensor_at(fc);
    const std::string& id_label = d_cat.morphism(d_cat.identity(fc));
    components[c].resize(v.at(c).size());
    for (int x = 0; x < static_cast<int>(v.at(c).size()); ++x) {
      int right = t.right().element_index(c, id_label);
      int cls = t.class_of(t.pair_index(c, x, right));
      components[c][x] = l.element_of_class(fc, cls);
    }
  }
  return NatTrans::from_components(v, std::move(target), std::move(components), check);
}

NatTrans lan_counit(const FinFunctor& f, const Presheaf& u, Check check) {
  if (!(u.base() == f.target()))
    throw Error(Error::Code::base_mismatch,
                "counit is taken at a presheaf over the functor's target");
  const FinCategory& d_cat = f.target();
  Presheaf ru = restrict_presheaf(f, u, Check::unchecked);
  LanPresheaf l = lan(f, ru, check);

  std::vector<std::vector<int>> components(d_cat.object_count());
  for (int d = 0; d < d_cat.object_count(); ++d) {
    const TensorProduct& t = l.tensor_at(d);

    // A pair (c, p, q : d -> f c) evaluates to action(q)(p); the label of p
    // inside restrict(f, u) at c equals its label inside u at f c.
    auto evaluate = [&](int i) {
      const TensorPair& p = t.pair(i);
      int q = d_cat.morphism_index(t.right().at(p.obj)[p.right]);
      return u.action(q, p.left);
    };

    if (check == Check::checked && t.pair_count() > 0) {
      std::vector<std::string> values(t.pair_count());
      for (int i = 0; i < t.pair_count(); ++i) values[i] = u.at(d)[evaluate(i)];
      tensor_universal(t, values);
    }

    components[d].resize(l.presheaf().at(d).size());
    for (size_t e = 0; e < components[d].size(); ++e)
      components[d][e] =
          evaluate(t.representative(l.class_of_element(d, static_cast<int>(e))));
  }
  return NatTrans::from_components(l.presheaf(), u, std::move(components), check);
}

TriangleReport lan_triangles(const FinFunctor& f, const Presheaf& u, const Presheaf& v,
                             Check check) {
  TriangleReport report;

  // Extension side: lan applied to the unit of v, then the counit at
  // lan(f, v); the composite must be the identity on lan(f, v).
  {
    Presheaf lv = lan(f, v, check).presheaf();
    NatTrans first = lan_map(f, lan_unit(f, v, check), check);
    NatTrans second = lan_counit(f, lv, check);
    compare_with_identity(compose_nat(first, second), "extension-side triangle", report);
  }

  // Restriction side: the unit at restrict(f, u), then the restricted
  // counit of u; the composite must be the identity on restrict(f, u).
  {
    Presheaf ru = restrict_presheaf(f, u, Check::unchecked);
    NatTrans first = lan_unit(f, ru, check);
    NatTrans second = restrict_nat(f, lan_counit(f, u, check), check);
    compare_with_identity(compose_nat(first, second), "restriction-side triangle", report);
  }

  return report;
}

}  // namespace finkan
