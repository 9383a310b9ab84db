#include "finkan/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace finkan {

namespace {

using nlohmann::json;

// Recursive-descent reader for the restricted dialect (objects, arrays,
// strings). Hand-rolled so that every rejection carries an exact line,
// column and expectation — including the rejection of numbers, booleans
// and null, which are not part of the grammar.
struct Reader {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(line, col, expected);
  }

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') break;
      advance();
    }
  }

  void expect(char c, const std::string& what) {
    if (peek() != c) fail(what);
    advance();
  }

  unsigned hex4() {
    unsigned value = 0;
    for (int i = 0; i < 4; ++i) {
      char c = peek();
      unsigned digit;
      if (c >= '0' && c <= '9') digit = static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f') digit = static_cast<unsigned>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') digit = static_cast<unsigned>(c - 'A' + 10);
      else fail("four hex digits");
      value = value * 16 + digit;
      advance();
    }
    return value;
  }

  void encode_utf8(unsigned cp, std::string& out) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xc0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3f));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xe0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
      out += static_cast<char>(0x80 | (cp & 0x3f));
    } else {
      out += static_cast<char>(0xf0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3f));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
      out += static_cast<char>(0x80 | (cp & 0x3f));
    }
  }

  std::string string() {
    expect('"', "'\"'");
    std::string out;
    while (true) {
      if (eof()) fail("closing '\"'");
      char c = peek();
      if (c == '"') {
        advance();
        return out;
      }
      if (static_cast<unsigned char>(c) < 0x20) fail("no raw control character inside a string");
      if (c != '\\') {
        out += c;
        advance();
        continue;
      }
      advance();
      switch (peek()) {
        case '"': out += '"'; advance(); break;
        case '\\': out += '\\'; advance(); break;
        case '/': out += '/'; advance(); break;
        case 'b': out += '\b'; advance(); break;
        case 'f': out += '\f'; advance(); break;
        case 'n': out += '\n'; advance(); break;
        case 'r': out += '\r'; advance(); break;
        case 't': out += '\t'; advance(); break;
        case 'u': {
          advance();
          unsigned cp = hex4();
          if (cp >= 0xd800 && cp <= 0xdbff) {
            expect('\\', "a low surrogate escape");
            expect('u', "a low surrogate escape");
            unsigned lo = hex4();
            if (lo < 0xdc00 || lo > 0xdfff) fail("a low surrogate");
            cp = 0x10000 + ((cp - 0xd800) << 10) + (lo - 0xdc00);
          } else if (cp >= 0xdc00 && cp <= 0xdfff) {
            fail("a high surrogate before a low surrogate");
          }
          encode_utf8(cp, out);
          break;
        }
        default: fail("a valid escape character");
      }
    }
  }

  json value() {
    switch (peek()) {
      case '{': return object();
      case '[': return array();
      case '"': return string();
      default: fail("a value (object, array, or string)");
    }
  }

  json object() {
    expect('{', "'{'");
    skip_ws();
    json out = json::object();
    if (peek() == '}') {
      advance();
      return out;
    }
    while (true) {
      skip_ws();
      if (peek() != '"') fail("a string key");
      int key_line = line, key_col = col;
      std::string key = string();
      if (out.contains(key))
        throw ParseError(key_line, key_col, "a distinct key (duplicate \"" + key + "\")");
      skip_ws();
      expect(':', "':'");
      skip_ws();
      out[key] = value();
      skip_ws();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == '}') {
        advance();
        return out;
      }
      fail("',' or '}'");
    }
  }

  json array() {
    expect('[', "'['");
    skip_ws();
    json out = json::array();
    if (peek() == ']') {
      advance();
      return out;
    }
    while (true) {
      skip_ws();
      out.push_back(value());
      skip_ws();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == ']') {
        advance();
        return out;
      }
      fail("',' or ']'");
    }
  }

  json document() {
    skip_ws();
    json out = value();
    skip_ws();
    if (!eof()) fail("end of input");
    return out;
  }
};

[[noreturn]] void semantic(const std::string& message) {
  throw Error(Error::Code::semantic_error, message);
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) semantic(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string str(const json& j, const std::string& what) {
  if (!j.is_string()) semantic(what + " must be a string");
  return j.get<std::string>();
}

void check_fields(const json& j, std::initializer_list<const char*> allowed,
                  const std::string& what) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) semantic("unexpected field \"" + key + "\" in " + what);
  }
}

std::map<std::string, std::string> string_map(const json& j, const std::string& what) {
  if (!j.is_object()) semantic(what + " must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : j.items()) out[key] = str(value, what + " entry");
  return out;
}

CategoryData category_body(const json& j) {
  check_fields(j, {"kind", "objects", "morphisms", "identity", "compose"}, "a category document");
  CategoryData data;
  const json& objects = field(j, "objects");
  if (!objects.is_array()) semantic("\"objects\" must be an array");
  for (const auto& o : objects) data.objects.push_back(str(o, "an object label"));
  const json& morphisms = field(j, "morphisms");
  if (!morphisms.is_array()) semantic("\"morphisms\" must be an array");
  for (const auto& m : morphisms) {
    if (!m.is_object()) semantic("each morphism must be an object");
    check_fields(m, {"id", "src", "tgt"}, "a morphism entry");
    data.morphisms.push_back({str(field(m, "id"), "\"id\""), str(field(m, "src"), "\"src\""),
                              str(field(m, "tgt"), "\"tgt\"")});
  }
  data.identity = string_map(field(j, "identity"), "\"identity\"");
  for (const auto& [key, value] : string_map(field(j, "compose"), "\"compose\"")) {
    size_t bar = key.find('|');
    if (bar == std::string::npos || key.find('|', bar + 1) != std::string::npos)
      semantic("composition key \"" + key + "\" must be \"a|b\"");
    data.compose[{key.substr(0, bar), key.substr(bar + 1)}] = value;
  }
  return data;
}

FunctorBody functor_body(const json& j) {
  check_fields(j, {"kind", "source", "target", "obj_map", "mor_map"}, "a functor document");
  FunctorBody body;
  body.source = str(field(j, "source"), "\"source\"");
  body.target = str(field(j, "target"), "\"target\"");
  body.data.obj_map = string_map(field(j, "obj_map"), "\"obj_map\"");
  body.data.mor_map = string_map(field(j, "mor_map"), "\"mor_map\"");
  return body;
}

PresheafBody presheaf_body(const json& j, bool copresheaf) {
  check_fields(j, {"kind", "base", "elements", "action"}, "a presheaf document");
  PresheafBody body;
  body.copresheaf = copresheaf;
  body.base = str(field(j, "base"), "\"base\"");
  const json& elements = field(j, "elements");
  if (!elements.is_object()) semantic("\"elements\" must be an object");
  for (const auto& [obj, list] : elements.items()) {
    if (!list.is_array()) semantic("element list of \"" + obj + "\" must be an array");
    auto& labels = body.data.elements[obj];
    for (const auto& e : list) labels.push_back(str(e, "an element label"));
  }
  const json& action = field(j, "action");
  if (!action.is_object()) semantic("\"action\" must be an object");
  for (const auto& [mor, table] : action.items())
    body.data.action[mor] = string_map(table, "action of \"" + mor + "\"");
  return body;
}

NatTransEndpoint endpoint(const json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object()) {
    std::string kind = str(field(j, "kind"), "\"kind\"");
    if (kind == "presheaf") return presheaf_body(j, false);
    if (kind == "copresheaf") return presheaf_body(j, true);
    semantic(what + " must be a path or an inline presheaf document");
  }
  semantic(what + " must be a path or an inline presheaf document");
  return {};
}

NatTransBody nattrans_body(const json& j) {
  check_fields(j, {"kind", "source", "target", "components"}, "a transformation document");
  NatTransBody body;
  body.source = endpoint(field(j, "source"), "\"source\"");
  body.target = endpoint(field(j, "target"), "\"target\"");
  const json& components = field(j, "components");
  if (!components.is_object()) semantic("\"components\" must be an object");
  for (const auto& [obj, table] : components.items())
    body.components[obj] = string_map(table, "component at \"" + obj + "\"");
  return body;
}

json category_json(const CategoryData& data) {
  json j;
  j["kind"] = "category";
  std::vector<std::string> objects = data.objects;
  std::sort(objects.begin(), objects.end());
  j["objects"] = objects;
  std::vector<MorRecord> morphisms = data.morphisms;
  std::sort(morphisms.begin(), morphisms.end(),
            [](const MorRecord& l, const MorRecord& r) { return l.id < r.id; });
  json marr = json::array();
  for (const auto& m : morphisms)
    marr.push_back(json{{"id", m.id}, {"src", m.src}, {"tgt", m.tgt}});
  j["morphisms"] = std::move(marr);
  j["identity"] = data.identity;
  json compose = json::object();
  for (const auto& [pair, value] : data.compose)
    compose[pair.first + "|" + pair.second] = value;
  j["compose"] = std::move(compose);
  return j;
}

json presheaf_json(const PresheafBody& body) {
  json j;
  j["kind"] = body.copresheaf ? "copresheaf" : "presheaf";
  j["base"] = body.base;
  j["elements"] = body.data.elements;
  j["action"] = body.data.action;
  return j;
}

json endpoint_json(const NatTransEndpoint& e) {
  if (std::holds_alternative<std::string>(e)) return std::get<std::string>(e);
  return presheaf_json(std::get<PresheafBody>(e));
}

json document_json(const Document& doc) {
  if (const auto* cat = std::get_if<CategoryData>(&doc.body)) return category_json(*cat);
  if (const auto* f = std::get_if<FunctorBody>(&doc.body)) {
    json j;
    j["kind"] = "functor";
    j["source"] = f->source;
    j["target"] = f->target;
    j["obj_map"] = f->data.obj_map;
    j["mor_map"] = f->data.mor_map;
    return j;
  }
  if (const auto* p = std::get_if<PresheafBody>(&doc.body)) return presheaf_json(*p);
  const auto& t = std::get<NatTransBody>(doc.body);
  json j;
  j["kind"] = "nattrans";
  j["source"] = endpoint_json(t.source);
  j["target"] = endpoint_json(t.target);
  j["components"] = t.components;
  return j;
}

}  // namespace

std::filesystem::path resolve_ref(const std::filesystem::path& referencing_file,
                                  const std::string& ref) {
  std::filesystem::path p(ref);
  if (p.is_absolute()) return p;
  return referencing_file.parent_path() / p;
}

Document parse_document(const std::string& text) {
  Reader reader{text};
  json j = reader.document();
  if (!j.is_object()) semantic("a document must be an object");
  std::string kind = str(field(j, "kind"), "\"kind\"");
  Document doc;
  if (kind == "category") doc.body = category_body(j);
  else if (kind == "functor") doc.body = functor_body(j);
  else if (kind == "presheaf") doc.body = presheaf_body(j, false);
  else if (kind == "copresheaf") doc.body = presheaf_body(j, true);
  else if (kind == "nattrans") doc.body = nattrans_body(j);
  else semantic("unknown document kind \"" + kind + "\"");
  return doc;
}

std::string serialize_document(const Document& doc) {
  return document_json(doc).dump(2) + "\n";
}

std::string serialize_category(const FinCategory& c) {
  return serialize_document(Document{c.data()});
}

std::string serialize_functor(const FinFunctor& f, const std::string& source_ref,
                              const std::string& target_ref) {
  return serialize_document(Document{FunctorBody{source_ref, target_ref, f.data()}});
}

std::string serialize_presheaf(const Presheaf& p, const std::string& base_ref, bool copresheaf) {
  return serialize_document(Document{PresheafBody{base_ref, copresheaf, p.data()}});
}

std::string serialize_nattrans(const NatTrans& t, const NatTransEndpoint& source,
                               const NatTransEndpoint& target) {
  NatTransBody body;
  body.source = source;
  body.target = target;
  const FinCategory& base = t.base();
  for (int c = 0; c < base.object_count(); ++c) {
    auto& table = body.components[base.object(c)];
    for (int e = 0; e < static_cast<int>(t.source().at(c).size()); ++e)
      table[t.source().at(c)[e]] = t.target().at(c)[t.component(c, e)];
  }
  return serialize_document(Document{std::move(body)});
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in)
    throw Error(Error::Code::parse_error, "cannot read file '" + file.string() + "'",
                {file.string()});
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FinCategory load_category(const std::filesystem::path& file) {
  Document doc = parse_document(read_file(file));
  const auto* data = std::get_if<CategoryData>(&doc.body);
  if (!data) semantic("'" + file.string() + "' is not a category document");
  return validate_category(*data);
}

FinFunctor load_functor(const std::filesystem::path& file) {
  Document doc = parse_document(read_file(file));
  const auto* body = std::get_if<FunctorBody>(&doc.body);
  if (!body) semantic("'" + file.string() + "' is not a functor document");
  FinCategory source = load_category(resolve_ref(file, body->source));
  FinCategory target = load_category(resolve_ref(file, body->target));
  return validate_functor(source, target, body->data);
}

LoadedPresheaf load_presheaf_inline(const std::filesystem::path& referencing_file,
                                    const PresheafBody& body) {
  FinCategory base = load_category(resolve_ref(referencing_file, body.base));
  if (body.copresheaf) base = opposite(base);
  return {validate_presheaf(base, body.data), body.copresheaf, body.base};
}

LoadedPresheaf load_presheaf(const std::filesystem::path& file) {
  Document doc = parse_document(read_file(file));
  const auto* body = std::get_if<PresheafBody>(&doc.body);
  if (!body) semantic("'" + file.string() + "' is not a presheaf document");
  return load_presheaf_inline(file, *body);
}

NatTrans load_nattrans(const std::filesystem::path& file) {
  Document doc = parse_document(read_file(file));
  const auto* body = std::get_if<NatTransBody>(&doc.body);
  if (!body) semantic("'" + file.string() + "' is not a transformation document");
  auto load_endpoint = [&](const NatTransEndpoint& e) {
    if (const auto* path = std::get_if<std::string>(&e))
      return load_presheaf(resolve_ref(file, *path));
    return load_presheaf_inline(file, std::get<PresheafBody>(e));
  };
  LoadedPresheaf source = load_endpoint(body->source);
  LoadedPresheaf target = load_endpoint(body->target);
  return validate_nattrans(source.presheaf, target.presheaf, body->components);
}

}  // namespace finkan
