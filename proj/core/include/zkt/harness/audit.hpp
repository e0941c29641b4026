#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zkt/circuits/types.hpp"
#include "zkt/harness/value.hpp"
#include "zkt/ledger/events.hpp"

namespace zkt {

struct AuditEntry {
    std::size_t event_index = 0;
    std::string kind;
    Address contract;
    std::uint64_t sequence_no = 0;
    AuditPreimage preimage;
    std::size_t clear_outputs = 0;  // trailing outputs that went to clear balances
};

/// Mass movements the auditor can account for, per token type.
struct AuditTotals {
    Value minted;  // only when issuance records were supplied
    Value burned;
    Value revealed;
    Value hidden_from_clear;
    Value consumed;  // hidden inputs spent
    Value produced;  // hidden outputs created by transfers and reveals
    std::optional<U256> hidden;  // minted + produced + hidden_from_clear - consumed
    U256 open;                   // revealed - hidden_from_clear
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    std::map<U256, AuditTotals> totals;
};

/// Opens every audit_d in the log. Throws WrongKey if any box does not open
/// under `auditor_sk`. `issued` supplies the minted preimages, which carry
/// no audit data of their own.
AuditReport auditDecrypt(const SecretKey& auditor_sk, const std::vector<Event>& events,
                         const std::vector<TokenPreimage>& issued = {});

/// Token fields a report may show.
inline const std::set<std::string> kAuditFields{"owner", "type", "nonce", "amount", "id", "payload"};

/// Throws ParseError on an unknown field name.
Json auditReportToJson(const AuditReport& r, const std::set<std::string>& fields = kAuditFields);

}  // namespace zkt
