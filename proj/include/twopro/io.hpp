#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include <json.hpp>

#include "twopro/fincat.hpp"
#include "twopro/twocat.hpp"

namespace twopro {

using Json = nlohmann::ordered_json;

// Reads a file and checks the top-level "format": 1 marker.
Json load_json_file(const std::filesystem::path& path);

// Resolves a value that is either an inline object or a path relative to base.
Json resolve_ref(const Json& v, const std::filesystem::path& base);

FinCat fincat_from_json(const Json& j);
Json fincat_to_json(const FinCat& c);

// Structural parse; ids are sorted so that index order is id order. Throws
// DuplicateId, DanglingBoundary or ParseError. Axioms are not checked here.
Fin2Cat parse_two_category(const Json& j);
// Parse followed by the exhaustive axiom check.
Fin2Cat load_two_category(const Json& j);
Json two_category_to_json(const Fin2Cat& c);

// Rejects keys outside the allowed set.
void require_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what);

Functor functor_from_json(const Json& j, const FinCat& a, const FinCat& b);
NatTrans nat_from_json(const Json& j, const FinCat& a, const FinCat& b);
Json functor_to_json(const FinCat& a, const FinCat& b, const Functor& f);

}  // namespace twopro
