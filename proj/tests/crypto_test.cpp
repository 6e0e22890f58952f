#include <doctest.h>

#include "ownlink/bytes.hpp"
#include "ownlink/canonical.hpp"
#include "ownlink/crypto.hpp"
#include "ownlink/rng.hpp"

using namespace ownlink;

TEST_SUITE("crypto") {

TEST_CASE("sha256 matches the standard test vector") {
  CHECK(to_hex(sha256("abc").data(), 32) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("ed25519 matches the RFC 8032 test vector") {
  Seed32 seed{};
  auto raw = hex_to_bytes("9d61b19deffd5a60ba844af492ec2cc44449c5697b326919703bac031cae7f60");
  REQUIRE(raw.has_value());
  std::copy(raw->begin(), raw->end(), seed.begin());
  auto kp = keypair_from_seed(seed);
  CHECK(to_hex(kp.public_key) ==
        "d75a980182b10ab7d54bfed3c964073a0ee172f3daa62325af021a68f707511a");
  auto sig = sign_detached(kp, "");
  CHECK(to_hex(sig) ==
        "e5564300c360ac729086e2cc806e828a84877f1eb8e5d974d873e06522490155"
        "5fb8821590a33bacc61e39701cf9b46bd25bf5f0595bbe24655141438e7a100b");
  CHECK(verify_detached(kp.public_key, "", sig));
  CHECK_FALSE(verify_detached(kp.public_key, "x", sig));
}

TEST_CASE("address is sha256 of the public key") {
  PublicKey pk;
  pk.fill(0x01);
  CHECK(address_of(pk).hex() ==
        "72cd6e8422c407fb6d098690f1130b7ded7ec2f7f5e1d30bd9d521f015363793");
}

TEST_CASE("seeded keypairs are deterministic and distinct") {
  auto a1 = keypair_from_seed64(7);
  auto a2 = keypair_from_seed64(7);
  auto b = keypair_from_seed64(8);
  CHECK(a1.address() == a2.address());
  CHECK(a1.address() != b.address());
}

TEST_CASE("canonical dump sorts keys and strips whitespace") {
  Json j{{"zeta", 1}, {"alpha", Json{{"b", 2}, {"a", 1}}}};
  CHECK(canonical_dump(j) == R"({"alpha":{"a":1,"b":2},"zeta":1})");
}

TEST_CASE("hex round trip and rejection of bad input") {
  auto bytes = hex_to_bytes("00ff10");
  REQUIRE(bytes.has_value());
  CHECK(to_hex(bytes->data(), bytes->size()) == "00ff10");
  CHECK_FALSE(hex_to_bytes("0g").has_value());
  CHECK_FALSE(hex_to_bytes("abc").has_value());
  CHECK_FALSE(Address::from_hex("1234").has_value());
}

}  // TEST_SUITE

TEST_SUITE("rng") {

TEST_CASE("same seed gives the same stream") {
  SeededRng a(99), b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.u64() == b.u64());
}

TEST_CASE("uniform stays in range") {
  SeededRng rng(1);
  for (int i = 0; i < 1000; ++i) CHECK(rng.uniform(7) < 7);
}

TEST_CASE("poisson mean is close to the target") {
  SeededRng rng(5);
  double sum = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) sum += static_cast<double>(rng.poisson(1.0));
  double mean = sum / n;
  CHECK(mean > 0.95);
  CHECK(mean < 1.05);
}

TEST_CASE("sample_indices yields k distinct values below n") {
  SeededRng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto idx = rng.sample_indices(20, 5);
    REQUIRE(idx.size() == 5);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      CHECK(idx[i] < 20);
      if (i > 0) CHECK(idx[i] > idx[i - 1]);
    }
  }
}

TEST_CASE("derived streams differ by label but are stable") {
  SeededRng base(42);
  auto c1 = base.derive("stores/0");
  auto c2 = base.derive("stores/1");
  auto c1_again = base.derive("stores/0");
  CHECK(c1.u64() != c2.u64());
  CHECK(SeededRng(42).derive("stores/0").u64() == c1_again.u64());
}

}  // TEST_SUITE
