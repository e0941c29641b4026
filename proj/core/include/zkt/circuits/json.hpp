#pragma once

#include "zkt/circuits/proof_system.hpp"
#include "zkt/circuits/types.hpp"
#include "zkt/token/envelopes.hpp"

namespace zkt {

void to_json(Json& j, const MintPublic& p);
void from_json(const Json& j, MintPublic& p);
void to_json(Json& j, const TransferPublic& p);
void from_json(const Json& j, TransferPublic& p);
void to_json(Json& j, const RevealingPublic& p);
void from_json(const Json& j, RevealingPublic& p);
void to_json(Json& j, const HidingPublic& p);
void from_json(const Json& j, HidingPublic& p);
void to_json(Json& j, const GrabPublic& p);
void from_json(const Json& j, GrabPublic& p);
void to_json(Json& j, const DvpPublic& p);
void from_json(const Json& j, DvpPublic& p);
void to_json(Json& j, const AuditPreimage& a);
void from_json(const Json& j, AuditPreimage& a);

/// Proofs appear in JSON as hex of their binary layout.
void to_json(Json& j, const Proof& p);
void from_json(const Json& j, Proof& p);

template <class PI>
void to_json(Json& j, const Delegated<PI>& d) {
    j = Json{{"pub", d.pub}, {"del_add", d.del_add}, {"del_b", d.del_b}};
}

template <class PI>
void from_json(const Json& j, Delegated<PI>& d) {
    d.pub = field(j, "pub").template get<PI>();
    d.del_add = field(j, "del_add").template get<Address>();
    d.del_b = field(j, "del_b").template get<Digest>();
}

template <class PI>
void to_json(Json& j, const Transaction<PI>& t) {
    j = Json{{"pub", t.pub}, {"proof", t.proof}};
}

template <class PI>
void from_json(const Json& j, Transaction<PI>& t) {
    t.pub = field(j, "pub").template get<PI>();
    t.proof = field(j, "proof").template get<Proof>();
}

}  // namespace zkt
