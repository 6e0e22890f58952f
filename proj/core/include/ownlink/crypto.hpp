#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ownlink/bytes.hpp"

namespace ownlink {

using PublicKey = std::array<unsigned char, 32>;
using SecretKey = std::array<unsigned char, 64>;  // libsodium ed25519 layout
using Signature = std::array<unsigned char, 64>;
using Seed32 = std::array<unsigned char, 32>;

struct KeyPair {
  PublicKey public_key{};
  SecretKey secret_key{};

  [[nodiscard]] Address address() const;
};

// Deterministic ed25519 keypair derivation.
KeyPair keypair_from_seed(const Seed32& seed);
KeyPair keypair_from_seed64(std::uint64_t seed);

Signature sign_detached(const KeyPair& key, std::string_view message);
bool verify_detached(const PublicKey& public_key, std::string_view message,
                     const Signature& sig);

std::array<unsigned char, 32> sha256(std::string_view data);

template <class Tag>
Digest32<Tag> sha256_digest(std::string_view data) {
  Digest32<Tag> d;
  d.bytes = sha256(data);
  return d;
}

// Addresses are SHA-256 of the 32-byte public key.
Address address_of(const PublicKey& public_key);

std::string to_hex(const PublicKey& key);
std::string to_hex(const Signature& sig);
std::optional<PublicKey> public_key_from_hex(std::string_view hex);
std::optional<Signature> signature_from_hex(std::string_view hex);

}  // namespace ownlink
