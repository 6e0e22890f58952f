#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace ownlink {

using Json = nlohmann::json;

// Canonical JSON: lexicographically sorted object keys, no insignificant
// whitespace, UTF-8. nlohmann::json keeps object keys in std::map order, so
// a compact dump of a default-ordered json value is already canonical.
// Every signed or hashed byte string in the system goes through here.
std::string canonical_dump(const Json& j);

}  // namespace ownlink
