#include "finkan/cli.hpp"

#include <cstdint>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "finkan/checker.hpp"
#include "finkan/io.hpp"

namespace finkan {

namespace {

using nlohmann::json;

// Everything the tool prints as JSON stays inside the document dialect
// (objects, arrays, strings only), so any output parses under the tool's
// own reader.
std::string dump(const json& j) { return j.dump(2) + "\n"; }

FunctorBody functor_refs(const std::filesystem::path& file) {
  Document doc = parse_document(read_file(file));
  const auto* body = std::get_if<FunctorBody>(&doc.body);
  if (!body)
    throw Error(Error::Code::semantic_error, "'" + file.string() + "' is not a functor document");
  return *body;
}

void require_base(const Presheaf& p, const FinCategory& expected, const std::string& what) {
  if (!(p.base() == expected))
    throw Error(Error::Code::base_mismatch, what, {});
}

NatTransEndpoint inline_body(const Presheaf& p, const std::string& base_ref, bool copresheaf) {
  return PresheafBody{base_ref, copresheaf, p.data()};
}

int cmd_validate(const std::string& file, std::ostream& out) {
  std::filesystem::path path(file);
  Document doc = parse_document(read_file(path));
  if (const auto* cat = std::get_if<CategoryData>(&doc.body)) {
    out << serialize_category(validate_category(*cat));
  } else if (const auto* f = std::get_if<FunctorBody>(&doc.body)) {
    FinCategory source = load_category(resolve_ref(path, f->source));
    FinCategory target = load_category(resolve_ref(path, f->target));
    out << serialize_functor(validate_functor(source, target, f->data), f->source, f->target);
  } else if (const auto* p = std::get_if<PresheafBody>(&doc.body)) {
    LoadedPresheaf loaded = load_presheaf_inline(path, *p);
    out << serialize_presheaf(loaded.presheaf, loaded.base_ref, loaded.copresheaf);
  } else {
    const auto& t = std::get<NatTransBody>(doc.body);
    auto load_endpoint = [&](const NatTransEndpoint& e) {
      if (const auto* ref = std::get_if<std::string>(&e))
        return load_presheaf(resolve_ref(path, *ref));
      return load_presheaf_inline(path, std::get<PresheafBody>(e));
    };
    LoadedPresheaf source = load_endpoint(t.source);
    LoadedPresheaf target = load_endpoint(t.target);
    NatTrans nat = validate_nattrans(source.presheaf, target.presheaf, t.components);
    auto echo = [&](const NatTransEndpoint& e, const LoadedPresheaf& loaded) -> NatTransEndpoint {
      if (const auto* ref = std::get_if<std::string>(&e)) return *ref;
      return inline_body(loaded.presheaf, loaded.base_ref, loaded.copresheaf);
    };
    out << serialize_nattrans(nat, echo(t.source, source), echo(t.target, target));
  }
  return 0;
}

int cmd_yoneda(const std::string& file, const std::string& object, const std::string& morphism,
               bool co, std::ostream& out) {
  FinCategory c = load_category(file);
  if (!object.empty()) {
    Presheaf p = co ? co_yoneda_obj(c, object) : yoneda_obj(c, object);
    out << serialize_presheaf(p, file, co);
  } else {
    NatTrans t = co ? co_yoneda_mor(c, morphism) : yoneda_mor(c, morphism);
    out << serialize_nattrans(t, inline_body(t.source(), file, co),
                              inline_body(t.target(), file, co));
  }
  return 0;
}

int cmd_nat(const std::string& left_file, const std::string& right_file, bool as_json,
            std::ostream& out) {
  LoadedPresheaf left = load_presheaf(left_file);
  LoadedPresheaf right = load_presheaf(right_file);
  require_base(right.presheaf, left.presheaf.base(),
               "the two presheaves live on different base categories");
  std::vector<NatTrans> all = enumerate_nat(left.presheaf, right.presheaf);
  if (as_json) {
    json arr = json::array();
    for (const NatTrans& t : all) arr.push_back(json::parse(nat_component_label(t)));
    out << dump(arr);
  } else {
    out << "count: " << all.size() << "\n";
    for (const NatTrans& t : all) out << nat_component_label(t) << "\n";
  }
  return 0;
}

int cmd_kan(bool left_kan, const std::string& functor_file, const std::string& presheaf_file,
            Check mode, std::ostream& out) {
  FinFunctor f = load_functor(functor_file);
  FunctorBody refs = functor_refs(functor_file);
  LoadedPresheaf v = load_presheaf(presheaf_file);
  require_base(v.presheaf, f.source(),
               "the presheaf must live on the functor's source category");
  Presheaf result =
      left_kan ? lan(f, v.presheaf, mode).presheaf() : ran(f, v.presheaf, mode).presheaf();
  out << serialize_presheaf(result, refs.target, false);
  return 0;
}

int cmd_tensor(const std::string& left_file, const std::string& right_file, bool as_json,
               std::ostream& out) {
  LoadedPresheaf left = load_presheaf(left_file);
  LoadedPresheaf right = load_presheaf(right_file);
  TensorProduct t = tensor(left.presheaf, right.presheaf);
  std::vector<std::vector<int>> classes = t.classes();
  if (as_json) {
    json pairs = json::array();
    for (int i = 0; i < t.pair_count(); ++i) pairs.push_back(json::parse(t.pair_label(i)));
    json cls = json::array();
    for (int k = 0; k < t.class_count(); ++k) {
      json members = json::array();
      for (int i : classes[k]) members.push_back(json::parse(t.pair_label(i)));
      cls.push_back(json{{"members", members}, {"representative", json::parse(t.class_label(k))}});
    }
    out << dump(json{{"classes", cls}, {"pairs", pairs}});
  } else {
    out << "pairs: " << t.pair_count() << "\n";
    out << "classes: " << t.class_count() << "\n";
    for (int k = 0; k < t.class_count(); ++k) {
      out << t.class_label(k) << ":";
      for (int i : classes[k]) out << " " << t.pair_label(i);
      out << "\n";
    }
  }
  return 0;
}

int cmd_unit_counit(bool counit, bool left_kan, const std::string& functor_file,
                    const std::string& presheaf_file, Check mode, std::ostream& out) {
  FinFunctor f = load_functor(functor_file);
  FunctorBody refs = functor_refs(functor_file);
  LoadedPresheaf given = load_presheaf(presheaf_file);
  // unit of ran and counit of lan sit at presheaves on the functor's
  // target; the other two at presheaves on its source.
  bool on_target = (counit == left_kan);
  require_base(given.presheaf, on_target ? f.target() : f.source(),
               on_target ? "the presheaf must live on the functor's target category"
                         : "the presheaf must live on the functor's source category");
  NatTrans t = counit ? (left_kan ? lan_counit(f, given.presheaf, mode)
                                  : ran_counit(f, given.presheaf, mode))
                      : (left_kan ? lan_unit(f, given.presheaf, mode)
                                  : ran_unit(f, given.presheaf, mode));
  // The given presheaf is echoed as a path reference; the computed endpoint
  // is inlined, on the base the computation lands on.
  const Presheaf& computed = counit ? t.source() : t.target();
  std::string computed_base;
  if (counit)
    computed_base = left_kan ? refs.target : refs.source;
  else
    computed_base = left_kan ? refs.source : refs.target;
  NatTransEndpoint computed_end = inline_body(computed, computed_base, false);
  if (counit)
    out << serialize_nattrans(t, computed_end, presheaf_file);
  else
    out << serialize_nattrans(t, presheaf_file, computed_end);
  return 0;
}

int cmd_check_adjunction(bool left_kan, const std::string& functor_file,
                         const std::string& probes, Check mode, bool as_json, std::ostream& out) {
  FinFunctor f = load_functor(functor_file);
  std::uint64_t seed = 1;
  if (probes.rfind("seed:", 0) == 0) {
    try {
      seed = std::stoull(probes.substr(5));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--probes", "expected std or seed:<number>");
    }
  } else if (probes != "std") {
    throw CLI::ValidationError("--probes", "expected std or seed:<number>");
  }
  AdjunctionCandidate cand = left_kan ? lan_adjunction(f, mode) : ran_adjunction(f, mode);
  std::vector<Presheaf> unit_probes = std_probes(cand.unit_base, seed);
  std::vector<Presheaf> counit_probes = std_probes(cand.counit_base, seed + 1);
  AdjunctionReport report = check_adjunction(cand, unit_probes, counit_probes);
  if (as_json) {
    json failures = json::array();
    for (const CheckFailure& fail : report.failures)
      failures.push_back(json{{"check", fail.check}, {"detail", fail.detail}});
    out << dump(json{{"checks_passed", std::to_string(report.checks_passed)},
                     {"failures", failures},
                     {"name", cand.name},
                     {"ok", report.ok() ? "true" : "false"}});
  } else {
    if (report.ok()) {
      out << "adjunction " << cand.name << ": ok, " << report.checks_passed
          << " checks passed\n";
    } else {
      out << "adjunction " << cand.name << ": FAILED, " << report.checks_passed
          << " checks passed, " << report.failures.size() << " failed\n";
      for (const CheckFailure& fail : report.failures)
        out << "  " << fail.check << ": " << fail.detail << "\n";
    }
  }
  return report.ok() ? 0 : 1;
}

int cmd_gen(const std::string& kind, std::uint64_t seed, const std::string& bounds_spec,
            const std::string& base_file, const std::string& target_file, std::ostream& out) {
  GenBounds bounds;
  bounds.seed = seed;
  if (!bounds_spec.empty()) {
    int values[3];
    size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      size_t comma = bounds_spec.find(',', pos);
      size_t end = (i == 2) ? bounds_spec.size() : comma;
      bool last_ok = (i == 2) ? (comma == std::string::npos) : (comma != std::string::npos);
      try {
        size_t used = 0;
        values[i] = std::stoi(bounds_spec.substr(pos, end - pos), &used);
        if (!last_ok || used != end - pos || values[i] < 0) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw CLI::ValidationError("--bounds", "expected objects,morphisms,elements");
      }
      pos = end + 1;
    }
    bounds.max_objects = values[0];
    bounds.max_morphisms = values[1];
    bounds.max_elements = values[2];
  }
  if (kind == "category") {
    out << serialize_category(gen_category(bounds));
    return 0;
  }
  if (base_file.empty())
    throw CLI::ValidationError("--base", "generating a " + kind + " needs a base category");
  FinCategory base = load_category(base_file);
  if (kind == "presheaf") {
    out << serialize_presheaf(gen_presheaf(bounds, base), base_file, false);
    return 0;
  }
  // kind == "functor": --base is the source, --target the target.
  if (target_file.empty())
    throw CLI::ValidationError("--target", "generating a functor needs a target category");
  FinCategory target = load_category(target_file);
  out << serialize_functor(gen_functor(bounds, base, target), base_file, target_file);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite categories, presheaves and Kan extensions", "finkan"};
  app.require_subcommand(1);
  bool unchecked = false;
  bool as_json = false;
  app.add_flag("--unchecked", unchecked,
               "trust derived structure maps instead of re-verifying the laws "
               "(input validation always stays on)");
  app.add_flag("--json", as_json, "emit JSON where the default output is plain text");

  std::string validate_file;
  CLI::App* cmd_v = app.add_subcommand("validate", "check a document and reprint it canonically");
  cmd_v->add_option("file", validate_file, "document to validate")->required();

  std::string yoneda_file, yoneda_object, yoneda_morphism;
  bool yoneda_co = false;
  CLI::App* cmd_y = app.add_subcommand("yoneda", "representable presheaf of an object or "
                                                 "induced transformation of a morphism");
  cmd_y->add_option("category", yoneda_file, "base category document")->required();
  CLI::Option* opt_obj = cmd_y->add_option("--object", yoneda_object, "object label");
  CLI::Option* opt_mor = cmd_y->add_option("--morphism", yoneda_morphism, "morphism label");
  opt_obj->excludes(opt_mor);
  cmd_y->add_flag("--co", yoneda_co, "corepresentable version (a copresheaf)");

  std::string nat_left, nat_right;
  CLI::App* cmd_n = app.add_subcommand("nat", "enumerate all natural transformations");
  cmd_n->add_option("--left", nat_left, "source presheaf document")->required();
  cmd_n->add_option("--right", nat_right, "target presheaf document")->required();

  std::string ran_functor, ran_presheaf;
  CLI::App* cmd_r = app.add_subcommand("ran", "right Kan extension of a presheaf along a functor");
  cmd_r->add_option("--functor", ran_functor, "functor document")->required();
  cmd_r->add_option("--presheaf", ran_presheaf, "presheaf on the functor's source")->required();

  std::string lan_functor, lan_presheaf;
  CLI::App* cmd_l = app.add_subcommand("lan", "left Kan extension of a presheaf along a functor");
  cmd_l->add_option("--functor", lan_functor, "functor document")->required();
  cmd_l->add_option("--presheaf", lan_presheaf, "presheaf on the functor's source")->required();

  std::string tensor_left, tensor_right;
  CLI::App* cmd_t = app.add_subcommand("tensor", "tensor product of a presheaf with a copresheaf");
  cmd_t->add_option("--left", tensor_left, "presheaf document")->required();
  cmd_t->add_option("--right", tensor_right, "copresheaf document on the same base")->required();

  std::string unit_mode, unit_functor, unit_presheaf;
  CLI::App* cmd_u = app.add_subcommand("unit", "unit of a Kan adjunction at a presheaf");
  cmd_u->add_option("--mode", unit_mode, "ran or lan")
      ->required()
      ->check(CLI::IsMember({"ran", "lan"}));
  cmd_u->add_option("--functor", unit_functor, "functor document")->required();
  cmd_u->add_option("--presheaf", unit_presheaf, "presheaf the unit is taken at")->required();

  std::string counit_mode, counit_functor, counit_presheaf;
  CLI::App* cmd_c = app.add_subcommand("counit", "counit of a Kan adjunction at a presheaf");
  cmd_c->add_option("--mode", counit_mode, "ran or lan")
      ->required()
      ->check(CLI::IsMember({"ran", "lan"}));
  cmd_c->add_option("--functor", counit_functor, "functor document")->required();
  cmd_c->add_option("--presheaf", counit_presheaf, "presheaf the counit is taken at")->required();

  std::string adj_mode, adj_functor, adj_probes = "std";
  CLI::App* cmd_a = app.add_subcommand("check-adjunction",
                                       "verify a Kan adjunction elementwise on probe presheaves");
  cmd_a->add_option("--mode", adj_mode, "ran or lan")
      ->required()
      ->check(CLI::IsMember({"ran", "lan"}));
  cmd_a->add_option("--functor", adj_functor, "functor document")->required();
  cmd_a->add_option("--probes", adj_probes, "std (default) or seed:<number>");

  std::string gen_kind, gen_bounds, gen_base, gen_target;
  std::uint64_t gen_seed = 0;
  CLI::App* cmd_g = app.add_subcommand("gen", "generate a random valid instance, reproducibly");
  cmd_g->add_option("--kind", gen_kind, "category, presheaf, or functor")
      ->required()
      ->check(CLI::IsMember({"category", "presheaf", "functor"}));
  cmd_g->add_option("--seed", gen_seed, "generator seed (default 0)");
  cmd_g->add_option("--bounds", gen_bounds, "size budget as objects,morphisms,elements");
  cmd_g->add_option("--base", gen_base, "base category (presheaf) or source category (functor)");
  cmd_g->add_option("--target", gen_target, "target category (functor)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("finkan");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    Check mode = unchecked ? Check::unchecked : Check::checked;
    if (app.got_subcommand(cmd_v)) return cmd_validate(validate_file, out);
    if (app.got_subcommand(cmd_y)) {
      if (yoneda_object.empty() == yoneda_morphism.empty())
        throw CLI::ValidationError("yoneda", "exactly one of --object or --morphism is required");
      return cmd_yoneda(yoneda_file, yoneda_object, yoneda_morphism, yoneda_co, out);
    }
    if (app.got_subcommand(cmd_n)) return cmd_nat(nat_left, nat_right, as_json, out);
    if (app.got_subcommand(cmd_r)) return cmd_kan(false, ran_functor, ran_presheaf, mode, out);
    if (app.got_subcommand(cmd_l)) return cmd_kan(true, lan_functor, lan_presheaf, mode, out);
    if (app.got_subcommand(cmd_t)) return cmd_tensor(tensor_left, tensor_right, as_json, out);
    if (app.got_subcommand(cmd_u))
      return cmd_unit_counit(false, unit_mode == "lan", unit_functor, unit_presheaf, mode, out);
    if (app.got_subcommand(cmd_c))
      return cmd_unit_counit(true, counit_mode == "lan", counit_functor, counit_presheaf, mode,
                             out);
    if (app.got_subcommand(cmd_a))
      return cmd_check_adjunction(adj_mode == "lan", adj_functor, adj_probes, mode, as_json, out);
    return cmd_gen(gen_kind, gen_seed, gen_bounds, gen_base, gen_target, out);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    if (e.code() == Error::Code::parse_error) {
      err << e.what() << "\n";
      return 2;
    }
    out << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    if (!e.witness().empty()) {
      out << "witness:";
      for (const std::string& w : e.witness()) out << " " << w;
      out << "\n";
    }
    return 1;
  }
}

}  // namespace finkan
