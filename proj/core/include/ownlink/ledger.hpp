#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ownlink/bytes.hpp"
#include "ownlink/canonical.hpp"
#include "ownlink/crypto.hpp"
#include "ownlink/result.hpp"

namespace ownlink {

enum class TxKind {
  kDeploy,
  kTransfer,
  kSetEntryId,
  kSetAccessFlag,
  kSetVault,
  kDirectoryPut,
  kDirectoryClear,
};

std::string to_string(TxKind kind);
std::optional<TxKind> tx_kind_from_string(std::string_view s);

// Per-user on-ledger state. entry_id and vault_address are mutually
// exclusive: at most one of them is non-null in any reachable state.
struct LinkContract {
  Address address;
  Address owner;
  std::string endpoint_url;  // empty means null
  EntryId entry_id;          // all-zero means null
  bool access_flag = true;
  Address vault_address;     // all-zero means null

  [[nodiscard]] Json to_json() const;
};

struct Transaction {
  std::uint64_t sequence = 0;  // assigned by the ledger, 1-based, gapless
  Address signer;
  PublicKey signer_key{};
  Signature signature{};
  TxKind kind = TxKind::kDeploy;
  Json body;

  // Bytes covered by the signature. The sequence number is assigned after
  // signing, so it is not part of the signed payload.
  [[nodiscard]] std::string signed_bytes() const;
  [[nodiscard]] Json to_json() const;
  static Result<Transaction> from_json(const Json& j);
};

// Deterministic in-process chain: one totally ordered, append-only log of
// signed transactions, a link contract per user, and the single directory
// contract mapping identity-entry id to contract address. State is a pure
// fold of the log given the genesis custodian set, so exporting the log and
// replaying it from genesis reproduces the state bit for bit.
class Ledger {
 public:
  explicit Ledger(std::vector<Address> genesis_custodians);

  // --- transaction submission -------------------------------------------
  // Builds, signs, applies and logs the transaction; on rejection the state
  // and the log are untouched.
  Result<Address> deploy_link_contract(const KeyPair& custodian,
                                       const std::string& endpoint_url,
                                       const EntryId& entry_id);
  Status transfer_ownership(const Address& contract, const KeyPair& current_owner,
                            const Address& new_owner);
  Status update_entry_id(const Address& contract, const KeyPair& owner,
                         const EntryId& new_id);  // all-zero id clears the link
  Status set_access_flag(const Address& contract, const KeyPair& owner, bool flag);
  Status set_vault(const Address& contract, const KeyPair& owner,
                   const Address& vault_address);
  Status directory_put(const EntryId& entry_id, const Address& contract,
                       const KeyPair& signer);
  Status directory_clear(const EntryId& entry_id, const KeyPair& signer);

  // Applies an externally built transaction (replay path). Signature and
  // authorization are re-checked against the state at this sequence number.
  Status apply(Transaction tx);

  // --- reads --------------------------------------------------------------
  [[nodiscard]] std::optional<Address> directory_lookup(const EntryId& entry_id) const;
  [[nodiscard]] Result<LinkContract> read_contract(const Address& address) const;
  [[nodiscard]] bool is_custodian(const Address& addr) const;
  [[nodiscard]] std::uint64_t head_sequence() const { return next_sequence_ - 1; }
  [[nodiscard]] const std::vector<Transaction>& log() const { return log_; }

  // Every id a contract has ever had mapped in the directory.
  [[nodiscard]] std::set<EntryId> published_ids(const Address& contract) const;

  // --- export / replay ------------------------------------------------------
  // Newline-delimited canonical-JSON transactions in sequence order.
  [[nodiscard]] std::string export_log() const;
  // Canonical serialization of the full contract + directory state.
  [[nodiscard]] std::string canonical_state() const;
  static Result<Ledger> replay(const std::string& ndjson,
                               std::vector<Address> genesis_custodians);

 private:
  Result<std::uint64_t> submit(const KeyPair& signer, TxKind kind, Json body);
  Status check_and_apply(const Transaction& tx);
  void clear_published_entries(const Address& contract);

  std::vector<Address> genesis_custodians_;
  std::set<Address> custodians_;
  std::map<Address, LinkContract> contracts_;
  std::map<EntryId, Address> directory_;  // absent key == null entry
  std::map<Address, std::set<EntryId>> published_;
  std::vector<Transaction> log_;
  std::uint64_t next_sequence_ = 1;
};

}  // namespace ownlink
