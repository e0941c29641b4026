#pragma once

#include <map>
#include <string>
#include <vector>

#include "zkt/crypto/json.hpp"
#include "zkt/token/token.hpp"

namespace zkt {

struct OwnedToken {
    TokenPreimage img;
    std::uint64_t leaf = 0;
    bool seized = false;  // a Grab event carried this token's grabber
    bool locked = false;  // committed to a pending DvP leg
    std::string label;
};

/// A bank, the authority, the auditor or a contract identity. Holds keys and
/// a wallet of unspent hidden tokens reconciled against ledger events.
struct Participant {
    std::string name;
    SecretKey sk;
    PublicKey pk;
    Account account;
    Address address;
    std::map<U256, GrabberKey> grabber_keys;            // per token type
    std::map<U256, std::vector<OwnedToken>> wallet;     // per token type

    /// Sum of unseized fungible amounts of a type.
    U256 hiddenBalance(const U256& type) const;
    std::vector<U256> hiddenIds(const U256& type) const;
    const OwnedToken* find(const U256& type, const TokenCommitment& c) const;
    bool remove(const U256& type, const TokenCommitment& c);
};

Participant makeParticipant(std::string name, const SecretKey& sk);

/// One off-chain message. Never written to the ledger.
struct ChannelMessage {
    std::string from;
    std::string to;
    std::string kind;  // transfer-preimage | burn-preimage | dvp-request | ack
    Json body;
    std::string reference;
    std::string signature;  // placeholder, not verified
};

void to_json(Json& j, const ChannelMessage& m);

class Channel {
public:
    const ChannelMessage& send(ChannelMessage m);
    /// Records an ack from `from` back to the sender of `original`.
    const ChannelMessage& ack(const ChannelMessage& original, const std::string& from);
    const std::vector<ChannelMessage>& messages() const noexcept { return log_; }

private:
    std::vector<ChannelMessage> log_;
};

}  // namespace zkt
