#include "ownlink/crypto.hpp"

#include <sodium.h>

#include <cstring>
#include <stdexcept>

namespace ownlink {

namespace {
void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) throw std::runtime_error("libsodium initialization failed");
}
}  // namespace

Address KeyPair::address() const { return address_of(public_key); }

KeyPair keypair_from_seed(const Seed32& seed) {
  ensure_sodium();
  KeyPair kp;
  crypto_sign_seed_keypair(kp.public_key.data(), kp.secret_key.data(), seed.data());
  return kp;
}

KeyPair keypair_from_seed64(std::uint64_t seed) {
  unsigned char raw[8];
  for (int i = 0; i < 8; ++i) raw[i] = static_cast<unsigned char>(seed >> (8 * i));
  Seed32 expanded;
  expanded = sha256(std::string_view(reinterpret_cast<const char*>(raw), sizeof raw));
  return keypair_from_seed(expanded);
}

Signature sign_detached(const KeyPair& key, std::string_view message) {
  ensure_sodium();
  Signature sig{};
  crypto_sign_detached(sig.data(), nullptr,
                       reinterpret_cast<const unsigned char*>(message.data()),
                       message.size(), key.secret_key.data());
  return sig;
}

bool verify_detached(const PublicKey& public_key, std::string_view message,
                     const Signature& sig) {
  ensure_sodium();
  return crypto_sign_verify_detached(
             sig.data(), reinterpret_cast<const unsigned char*>(message.data()),
             message.size(), public_key.data()) == 0;
}

std::array<unsigned char, 32> sha256(std::string_view data) {
  ensure_sodium();
  std::array<unsigned char, 32> out{};
  crypto_hash_sha256(out.data(), reinterpret_cast<const unsigned char*>(data.data()),
                     data.size());
  return out;
}

Address address_of(const PublicKey& public_key) {
  Address addr;
  addr.bytes = sha256(
      std::string_view(reinterpret_cast<const char*>(public_key.data()), public_key.size()));
  return addr;
}

std::string to_hex(const PublicKey& key) { return to_hex(key.data(), key.size()); }
std::string to_hex(const Signature& sig) { return to_hex(sig.data(), sig.size()); }

std::optional<PublicKey> public_key_from_hex(std::string_view hex) {
  auto raw = hex_to_bytes(hex);
  if (!raw || raw->size() != 32) return std::nullopt;
  PublicKey key;
  std::memcpy(key.data(), raw->data(), key.size());
  return key;
}

std::optional<Signature> signature_from_hex(std::string_view hex) {
  auto raw = hex_to_bytes(hex);
  if (!raw || raw->size() != 64) return std::nullopt;
  Signature sig;
  std::memcpy(sig.data(), raw->data(), sig.size());
  return sig;
}

}  // namespace ownlink
