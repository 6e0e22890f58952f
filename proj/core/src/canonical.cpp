#include "ownlink/canonical.hpp"

namespace ownlink {

std::string canonical_dump(const Json& j) {
  // Compact separators, keys already sorted by the underlying std::map.
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
}

}  // namespace ownlink
