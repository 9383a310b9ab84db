#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "finkan/functor.hpp"

namespace finkan {

// Document bodies mirror the on-disk grammar. The JSON dialect is
// restricted: objects, arrays and strings only; numbers, booleans and null
// are rejected at parse time with a position. Serialization is canonical:
// sorted keys, two-space indent, "|"-joined composition keys, trailing
// newline. parse_document(serialize_document(d)) == d, exactly.

struct FunctorBody {
  std::string source;  // path reference, relative to the referencing file
  std::string target;
  FunctorData data;

  friend bool operator==(const FunctorBody&, const FunctorBody&) = default;
};

struct PresheafBody {
  std::string base;
  bool copresheaf = false;  // "kind": "copresheaf" marks covariant reading
  PresheafData data;

  friend bool operator==(const PresheafBody&, const PresheafBody&) = default;
};

// Endpoints of a transformation document: a path reference or an inline
// presheaf document body.
using NatTransEndpoint = std::variant<std::string, PresheafBody>;

struct NatTransBody {
  NatTransEndpoint source;
  NatTransEndpoint target;
  std::map<std::string, std::map<std::string, std::string>> components;

  friend bool operator==(const NatTransBody&, const NatTransBody&) = default;
};

struct Document {
  std::variant<CategoryData, FunctorBody, PresheafBody, NatTransBody> body;

  friend bool operator==(const Document&, const Document&) = default;
};

Document parse_document(const std::string& text);
std::string serialize_document(const Document& doc);

std::string serialize_category(const FinCategory& c);
std::string serialize_functor(const FinFunctor& f, const std::string& source_ref,
                              const std::string& target_ref);
std::string serialize_presheaf(const Presheaf& p, const std::string& base_ref, bool copresheaf);
std::string serialize_nattrans(const NatTrans& t, const NatTransEndpoint& source,
                               const NatTransEndpoint& target);

// Filesystem loaders. Path references inside documents resolve relative to
// the directory of the referencing file. A copresheaf document is loaded as
// a presheaf on the opposite of its base category.
FinCategory load_category(const std::filesystem::path& file);
FinFunctor load_functor(const std::filesystem::path& file);

struct LoadedPresheaf {
  Presheaf presheaf;
  bool copresheaf = false;
  std::string base_ref;
};
LoadedPresheaf load_presheaf(const std::filesystem::path& file);
NatTrans load_nattrans(const std::filesystem::path& file);

// A path reference as it appears inside (or next to) a document: absolute
// paths stand, relative ones resolve against the referencing file's
// directory.
std::filesystem::path resolve_ref(const std::filesystem::path& referencing_file,
                                  const std::string& ref);

// An inline presheaf body (as found in a transformation endpoint), with its
// base reference resolved against the file the body appeared in.
LoadedPresheaf load_presheaf_inline(const std::filesystem::path& referencing_file,
                                    const PresheafBody& body);

std::string read_file(const std::filesystem::path& file);

}  // namespace finkan
