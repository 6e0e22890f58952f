#include "ownlink/ledger.hpp"

#include <sstream>

namespace ownlink {

namespace {

Json address_json(const Address& a) { return a.hex(); }
Json entry_json(const EntryId& e) { return e.hex(); }

Result<Address> address_from_json(const Json& j) {
  if (!j.is_string()) return err("malformed_tx", "address field is not a string");
  auto a = Address::from_hex(j.get<std::string>());
  if (!a) return err("malformed_tx", "bad address hex");
  return *a;
}

Result<EntryId> entry_from_json(const Json& j) {
  if (!j.is_string()) return err("malformed_tx", "entry id field is not a string");
  auto e = EntryId::from_hex(j.get<std::string>());
  if (!e) return err("malformed_tx", "bad entry id hex");
  return *e;
}

// Pure function of the applied deploy transaction, so replay reconstructs
// the same address.
Address derive_contract_address(const Json& body, std::uint64_t seq, const Address& signer) {
  Json material{{"body", body}, {"seq", seq}, {"signer", signer.hex()}};
  return sha256_digest<address_tag>("ownlink.contract:" + canonical_dump(material));
}

}  // namespace

std::string to_string(TxKind kind) {
  switch (kind) {
    case TxKind::kDeploy: return "deploy";
    case TxKind::kTransfer: return "transfer";
    case TxKind::kSetEntryId: return "set_entry_id";
    case TxKind::kSetAccessFlag: return "set_access_flag";
    case TxKind::kSetVault: return "set_vault";
    case TxKind::kDirectoryPut: return "directory_put";
    case TxKind::kDirectoryClear: return "directory_clear";
  }
  return "unknown";
}

std::optional<TxKind> tx_kind_from_string(std::string_view s) {
  if (s == "deploy") return TxKind::kDeploy;
  if (s == "transfer") return TxKind::kTransfer;
  if (s == "set_entry_id") return TxKind::kSetEntryId;
  if (s == "set_access_flag") return TxKind::kSetAccessFlag;
  if (s == "set_vault") return TxKind::kSetVault;
  if (s == "directory_put") return TxKind::kDirectoryPut;
  if (s == "directory_clear") return TxKind::kDirectoryClear;
  return std::nullopt;
}

Json LinkContract::to_json() const {
  return Json{{"address", address.hex()},
              {"owner", owner.hex()},
              {"endpoint_url", endpoint_url},
              {"entry_id", entry_id.hex()},
              {"access_flag", access_flag},
              {"vault_address", vault_address.hex()}};
}

std::string Transaction::signed_bytes() const {
  Json j{{"body", body},
         {"kind", to_string(kind)},
         {"signer", signer.hex()},
         {"signer_key", ownlink::to_hex(signer_key)}};
  return canonical_dump(j);
}

Json Transaction::to_json() const {
  return Json{{"body", body},
              {"kind", to_string(kind)},
              {"seq", sequence},
              {"signature", ownlink::to_hex(signature)},
              {"signer", signer.hex()},
              {"signer_key", ownlink::to_hex(signer_key)}};
}

Result<Transaction> Transaction::from_json(const Json& j) {
  if (!j.is_object()) return err("malformed_tx", "transaction is not an object");
  for (const char* field : {"body", "kind", "seq", "signature", "signer", "signer_key"})
    if (!j.contains(field)) return err("malformed_tx", std::string("missing field ") + field);
  Transaction tx;
  auto kind = tx_kind_from_string(j["kind"].get<std::string>());
  if (!kind) return err("malformed_tx", "unknown transaction kind");
  tx.kind = *kind;
  tx.body = j["body"];
  tx.sequence = j["seq"].get<std::uint64_t>();
  auto signer = address_from_json(j["signer"]);
  if (!signer) return signer.error();
  tx.signer = signer.value();
  auto key = public_key_from_hex(j["signer_key"].get<std::string>());
  if (!key) return err("malformed_tx", "bad signer key hex");
  tx.signer_key = *key;
  auto sig = signature_from_hex(j["signature"].get<std::string>());
  if (!sig) return err("malformed_tx", "bad signature hex");
  tx.signature = *sig;
  return tx;
}

Ledger::Ledger(std::vector<Address> genesis_custodians)
    : genesis_custodians_(std::move(genesis_custodians)),
      custodians_(genesis_custodians_.begin(), genesis_custodians_.end()) {}

bool Ledger::is_custodian(const Address& addr) const { return custodians_.count(addr) > 0; }

Result<std::uint64_t> Ledger::submit(const KeyPair& signer, TxKind kind, Json body) {
  Transaction tx;
  tx.kind = kind;
  tx.body = std::move(body);
  tx.signer = signer.address();
  tx.signer_key = signer.public_key;
  tx.signature = sign_detached(signer, tx.signed_bytes());
  tx.sequence = next_sequence_;
  auto applied = check_and_apply(tx);
  if (!applied.ok()) return applied.error();
  return tx.sequence;
}

Status Ledger::apply(Transaction tx) {
  if (tx.sequence != next_sequence_)
    return err("bad_sequence", "expected sequence " + std::to_string(next_sequence_));
  return check_and_apply(tx);
}

Status Ledger::check_and_apply(const Transaction& tx) {
  if (tx.signer.is_zero()) return err("null_address", "null address cannot sign");
  if (address_of(tx.signer_key) != tx.signer)
    return err("invalid_signature", "signer address does not match signer key");
  if (!verify_detached(tx.signer_key, tx.signed_bytes(), tx.signature))
    return err("invalid_signature", "signature verification failed");

  // Validate and stage the state change; nothing is mutated on rejection.
  switch (tx.kind) {
    case TxKind::kDeploy: {
      if (!is_custodian(tx.signer))
        return err("not_custodian", "deploy requires a custodian signer");
      auto entry = entry_from_json(tx.body.value("entry_id", Json()));
      if (!entry) return entry.error();
      if (entry.value().is_zero()) return err("entry_id_null", "deploy requires a non-null entry id");
      if (!tx.body.contains("endpoint_url") || !tx.body["endpoint_url"].is_string())
        return err("malformed_tx", "deploy body needs endpoint_url");
      Address contract_addr = derive_contract_address(tx.body, tx.sequence, tx.signer);
      if (contracts_.count(contract_addr))
        return err("address_collision", "derived contract address already exists");
      LinkContract c;
      c.address = contract_addr;
      c.owner = tx.signer;
      c.endpoint_url = tx.body["endpoint_url"].get<std::string>();
      c.entry_id = entry.value();
      c.access_flag = true;
      contracts_[contract_addr] = c;
      break;
    }
    case TxKind::kTransfer: {
      auto contract = address_from_json(tx.body.value("contract", Json()));
      if (!contract) return contract.error();
      auto it = contracts_.find(contract.value());
      if (it == contracts_.end()) return err("unknown_contract", "no contract at address");
      if (it->second.owner != tx.signer)
        return err("not_owner", "transfer must be signed by the current owner");
      auto new_owner = address_from_json(tx.body.value("new_owner", Json()));
      if (!new_owner) return new_owner.error();
      if (new_owner.value().is_zero())
        return err("null_address", "cannot transfer to the null address");
      it->second.owner = new_owner.value();
      // Claim semantics: transferring to a non-custodian (data-owner) address
      // zeroes every directory entry this contract has published.
      if (!is_custodian(new_owner.value())) clear_published_entries(it->first);
      break;
    }
    case TxKind::kSetEntryId: {
      auto contract = address_from_json(tx.body.value("contract", Json()));
      if (!contract) return contract.error();
      auto it = contracts_.find(contract.value());
      if (it == contracts_.end()) return err("unknown_contract", "no contract at address");
      if (it->second.owner != tx.signer)
        return err("not_owner", "update must be signed by the owner");
      auto entry = entry_from_json(tx.body.value("entry_id", Json()));
      if (!entry) return entry.error();
      it->second.entry_id = entry.value();
      if (!entry.value().is_zero()) it->second.vault_address = Address{};
      break;
    }
    case TxKind::kSetAccessFlag: {
      auto contract = address_from_json(tx.body.value("contract", Json()));
      if (!contract) return contract.error();
      auto it = contracts_.find(contract.value());
      if (it == contracts_.end()) return err("unknown_contract", "no contract at address");
      if (it->second.owner != tx.signer)
        return err("not_owner", "update must be signed by the owner");
      if (!tx.body.contains("flag") || !tx.body["flag"].is_boolean())
        return err("malformed_tx", "set_access_flag body needs a boolean flag");
      it->second.access_flag = tx.body["flag"].get<bool>();
      break;
    }
    case TxKind::kSetVault: {
      auto contract = address_from_json(tx.body.value("contract", Json()));
      if (!contract) return contract.error();
      auto it = contracts_.find(contract.value());
      if (it == contracts_.end()) return err("unknown_contract", "no contract at address");
      if (it->second.owner != tx.signer)
        return err("not_owner", "update must be signed by the owner");
      auto vault = address_from_json(tx.body.value("vault_address", Json()));
      if (!vault) return vault.error();
      if (vault.value().is_zero()) return err("null_address", "vault address must be non-null");
      it->second.vault_address = vault.value();
      it->second.entry_id = EntryId{};
      it->second.endpoint_url.clear();
      clear_published_entries(it->first);
      break;
    }
    case TxKind::kDirectoryPut: {
      auto entry = entry_from_json(tx.body.value("entry_id", Json()));
      if (!entry) return entry.error();
      if (entry.value().is_zero()) return err("entry_id_null", "cannot map the null id");
      auto contract = address_from_json(tx.body.value("contract", Json()));
      if (!contract) return contract.error();
      auto it = contracts_.find(contract.value());
      if (it == contracts_.end()) return err("unknown_contract", "no contract at address");
      if (it->second.owner != tx.signer)
        return err("not_owner", "directory_put must be signed by the contract owner");
      auto existing = directory_.find(entry.value());
      if (existing != directory_.end() && existing->second != contract.value())
        return err("directory_collision", "id already mapped to a different contract");
      directory_[entry.value()] = contract.value();
      published_[contract.value()].insert(entry.value());
      break;
    }
    case TxKind::kDirectoryClear: {
      auto entry = entry_from_json(tx.body.value("entry_id", Json()));
      if (!entry) return entry.error();
      auto existing = directory_.find(entry.value());
      if (existing == directory_.end())
        return err("directory_id_unknown", "id not present in the directory");
      auto it = contracts_.find(existing->second);
      if (it == contracts_.end() || it->second.owner != tx.signer)
        return err("not_owner", "directory_clear must be signed by the mapped contract's owner");
      directory_.erase(existing);
      break;
    }
  }

  log_.push_back(tx);
  ++next_sequence_;
  return ok_status();
}

void Ledger::clear_published_entries(const Address& contract) {
  auto pub = published_.find(contract);
  if (pub == published_.end()) return;
  for (const auto& id : pub->second) {
    auto it = directory_.find(id);
    if (it != directory_.end() && it->second == contract) directory_.erase(it);
  }
}

Result<Address> Ledger::deploy_link_contract(const KeyPair& custodian,
                                             const std::string& endpoint_url,
                                             const EntryId& entry_id) {
  if (entry_id.is_zero()) return err("entry_id_null", "deploy requires a non-null entry id");
  if (directory_.count(entry_id))
    return err("duplicate_entry_id", "entry id already present in the directory");
  Json body{{"endpoint_url", endpoint_url}, {"entry_id", entry_id.hex()}};
  auto seq = submit(custodian, TxKind::kDeploy, body);
  if (!seq.ok()) return seq.error();
  const Address contract = derive_contract_address(body, seq.value(), custodian.address());
  auto put = directory_put(entry_id, contract, custodian);
  if (!put.ok()) return put.error();
  return contract;
}

Status Ledger::transfer_ownership(const Address& contract, const KeyPair& current_owner,
                                  const Address& new_owner) {
  Json body{{"contract", contract.hex()}, {"new_owner", new_owner.hex()}};
  auto seq = submit(current_owner, TxKind::kTransfer, body);
  if (!seq.ok()) return seq.error();
  return ok_status();
}

Status Ledger::update_entry_id(const Address& contract, const KeyPair& owner,
                               const EntryId& new_id) {
  Json body{{"contract", contract.hex()}, {"entry_id", new_id.hex()}};
  auto seq = submit(owner, TxKind::kSetEntryId, body);
  if (!seq.ok()) return seq.error();
  return ok_status();
}

Status Ledger::set_access_flag(const Address& contract, const KeyPair& owner, bool flag) {
  Json body{{"contract", contract.hex()}, {"flag", flag}};
  auto seq = submit(owner, TxKind::kSetAccessFlag, body);
  if (!seq.ok()) return seq.error();
  return ok_status();
}

Status Ledger::set_vault(const Address& contract, const KeyPair& owner,
                         const Address& vault_address) {
  Json body{{"contract", contract.hex()}, {"vault_address", vault_address.hex()}};
  auto seq = submit(owner, TxKind::kSetVault, body);
  if (!seq.ok()) return seq.error();
  return ok_status();
}

Status Ledger::directory_put(const EntryId& entry_id, const Address& contract,
                             const KeyPair& signer) {
  Json body{{"contract", contract.hex()}, {"entry_id", entry_id.hex()}};
  auto seq = submit(signer, TxKind::kDirectoryPut, body);
  if (!seq.ok()) return seq.error();
  return ok_status();
}

Status Ledger::directory_clear(const EntryId& entry_id, const KeyPair& signer) {
  Json body{{"entry_id", entry_id.hex()}};
  auto seq = submit(signer, TxKind::kDirectoryClear, body);
  if (!seq.ok()) return seq.error();
  return ok_status();
}

std::optional<Address> Ledger::directory_lookup(const EntryId& entry_id) const {
  auto it = directory_.find(entry_id);
  if (it == directory_.end()) return std::nullopt;
  return it->second;
}

Result<LinkContract> Ledger::read_contract(const Address& address) const {
  auto it = contracts_.find(address);
  if (it == contracts_.end()) return err("unknown_contract", "no contract at address");
  return it->second;
}

std::set<EntryId> Ledger::published_ids(const Address& contract) const {
  auto it = published_.find(contract);
  if (it == published_.end()) return {};
  return it->second;
}

std::string Ledger::export_log() const {
  std::ostringstream out;
  for (const auto& tx : log_) out << canonical_dump(tx.to_json()) << '\n';
  return out.str();
}

std::string Ledger::canonical_state() const {
  Json contracts = Json::object();
  for (const auto& [addr, c] : contracts_) contracts[addr.hex()] = c.to_json();
  Json directory = Json::object();
  for (const auto& [id, addr] : directory_) directory[id.hex()] = addr.hex();
  Json published = Json::object();
  for (const auto& [addr, ids] : published_) {
    Json arr = Json::array();
    for (const auto& id : ids) arr.push_back(id.hex());
    published[addr.hex()] = arr;
  }
  Json custodians = Json::array();
  for (const auto& a : custodians_) custodians.push_back(a.hex());
  Json state{{"contracts", contracts},
             {"custodians", custodians},
             {"directory", directory},
             {"head", head_sequence()},
             {"published", published}};
  return canonical_dump(state);
}

Result<Ledger> Ledger::replay(const std::string& ndjson,
                              std::vector<Address> genesis_custodians) {
  Ledger ledger(std::move(genesis_custodians));
  std::istringstream in(ndjson);
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded())
      return err("malformed_tx", "line " + std::to_string(line_no) + ": invalid JSON");
    auto tx = Transaction::from_json(j);
    if (!tx.ok()) return tx.error();
    auto applied = ledger.apply(tx.value());
    if (!applied.ok())
      return err(applied.error().code,
                 "line " + std::to_string(line_no) + ": " + applied.error().message);
  }
  return ledger;
}

}  // namespace ownlink
