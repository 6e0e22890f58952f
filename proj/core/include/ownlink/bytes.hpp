#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ownlink {

std::string to_hex(const unsigned char* data, std::size_t len);
std::optional<std::vector<unsigned char>> hex_to_bytes(std::string_view hex);

// 32-byte value with a phantom tag so addresses, entry ids and record ids
// cannot be mixed up at compile time. The all-zero value is the null value.
template <class Tag>
struct Digest32 {
  std::array<unsigned char, 32> bytes{};

  [[nodiscard]] bool is_zero() const {
    for (auto b : bytes)
      if (b != 0) return false;
    return true;
  }

  [[nodiscard]] std::string hex() const { return to_hex(bytes.data(), bytes.size()); }

  static std::optional<Digest32> from_hex(std::string_view s) {
    auto raw = hex_to_bytes(s);
    if (!raw || raw->size() != 32) return std::nullopt;
    Digest32 d;
    std::copy(raw->begin(), raw->end(), d.bytes.begin());
    return d;
  }

  auto operator<=>(const Digest32&) const = default;
};

struct address_tag {};
struct entry_id_tag {};
struct record_id_tag {};

using Address = Digest32<address_tag>;
using EntryId = Digest32<entry_id_tag>;
using RecordId = Digest32<record_id_tag>;

using Nonce16 = std::array<unsigned char, 16>;

std::string to_hex(const Nonce16& nonce);

}  // namespace ownlink
