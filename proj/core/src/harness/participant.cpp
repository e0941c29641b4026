#include "zkt/harness/participant.hpp"

#include <algorithm>

#include "zkt/crypto/keys.hpp"

namespace zkt {

U256 Participant::hiddenBalance(const U256& type) const {
    U256 total;
    auto it = wallet.find(type);
    if (it == wallet.end()) return total;
    for (const auto& t : it->second) {
        if (!t.seized) total = addOrThrow(total, t.img.amount);
    }
    return total;
}

std::vector<U256> Participant::hiddenIds(const U256& type) const {
    std::vector<U256> ids;
    auto it = wallet.find(type);
    if (it == wallet.end()) return ids;
    for (const auto& t : it->second) {
        if (!t.seized && !t.img.id.isZero()) ids.push_back(t.img.id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

const OwnedToken* Participant::find(const U256& type, const TokenCommitment& c) const {
    auto it = wallet.find(type);
    if (it == wallet.end()) return nullptr;
    for (const auto& t : it->second) {
        if (commit(t.img) == c) return &t;
    }
    return nullptr;
}

bool Participant::remove(const U256& type, const TokenCommitment& c) {
    auto it = wallet.find(type);
    if (it == wallet.end()) return false;
    auto& v = it->second;
    auto pos = std::find_if(v.begin(), v.end(), [&](const OwnedToken& t) { return commit(t.img) == c; });
    if (pos == v.end()) return false;
    v.erase(pos);
    return true;
}

Participant makeParticipant(std::string name, const SecretKey& sk) {
    Participant p;
    p.address = addressFromName(name);
    p.name = std::move(name);
    p.sk = sk;
    p.pk = derivePublicKey(sk);
    p.account = getAccount(sk);
    return p;
}

void to_json(Json& j, const ChannelMessage& m) {
    j = Json{{"from", m.from},           {"to", m.to},
             {"kind", m.kind},           {"body", m.body},
             {"reference", m.reference}, {"signature", m.signature}};
}

const ChannelMessage& Channel::send(ChannelMessage m) {
    log_.push_back(std::move(m));
    return log_.back();
}

const ChannelMessage& Channel::ack(const ChannelMessage& original, const std::string& from) {
    ChannelMessage a{from, original.from, "ack", Json{{"acked", original.kind}}, original.reference, "unsigned"};
    return send(std::move(a));
}

}  // namespace zkt
