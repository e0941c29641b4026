#include "zkt/harness/audit.hpp"

#include <algorithm>

#include "zkt/circuits/encoding.hpp"
#include "zkt/crypto/seal.hpp"
#include "zkt/error.hpp"
#include "zkt/token/envelopes.hpp"

namespace zkt {
namespace {

void add(Value& into, const TokenPreimage& t) {
    into.amount = addOrThrow(into.amount, t.amount);
    if (!t.id.isZero()) into.ids.push_back(t.id);
}

U256 typeOfEntry(const AuditPreimage& a) {
    if (!a.inputs.empty()) return a.inputs.front().type;
    if (!a.outputs.empty()) return a.outputs.front().type;
    return U256{};
}

Json tokenJson(const TokenPreimage& t, const std::set<std::string>& fields) {
    Json full = t;
    Json out = Json::object();
    for (const auto& [key, value] : full.items()) {
        if (fields.contains(key)) out[key] = value;
    }
    return out;
}

Json tokensJson(const std::vector<TokenPreimage>& ts, std::size_t from, std::size_t to,
                const std::set<std::string>& fields) {
    Json a = Json::array();
    for (std::size_t i = from; i < to; ++i) a.push_back(tokenJson(ts[i], fields));
    return a;
}

}  // namespace

AuditReport auditDecrypt(const SecretKey& auditor_sk, const std::vector<Event>& events,
                         const std::vector<TokenPreimage>& issued) {
    AuditReport r;
    for (const auto& t : issued) add(r.totals[t.type].minted, t);

    for (std::size_t i = 0; i < events.size(); ++i) {
        const Event& e = events[i];
        if (!e.payload.contains("audit_d")) continue;
        Bytes sealed = bytesFromJson(e.payload["audit_d"]);
        Bytes plain = openWithKey(auditor_sk, parseSealedBox(sealed));

        AuditEntry entry;
        entry.event_index = i;
        entry.kind = e.kind;
        entry.contract = e.contract;
        entry.sequence_no = e.sequence_no;
        entry.preimage = decodeAuditPreimage(plain);
        if (e.kind == "RevealingTransfer") entry.clear_outputs = field(e.payload, "outputs").size();
        const auto& pre = entry.preimage;
        if (entry.clear_outputs > pre.outputs.size()) {
            throw Error(Errc::ParseError, "event " + std::to_string(i) + ": more clear outputs than outputs");
        }

        auto& tot = r.totals[typeOfEntry(pre)];
        const std::size_t hidden_outputs = pre.outputs.size() - entry.clear_outputs;
        for (const auto& t : pre.inputs) add(tot.consumed, t);
        if (e.kind == "HidingTransfer") {
            for (const auto& t : pre.outputs) add(tot.hidden_from_clear, t);
        } else {
            for (std::size_t k = 0; k < hidden_outputs; ++k) add(tot.produced, pre.outputs[k]);
            for (std::size_t k = hidden_outputs; k < pre.outputs.size(); ++k) add(tot.revealed, pre.outputs[k]);
        }
        tot.burned.amount = addOrThrow(tot.burned.amount, pre.burn_a);
        tot.burned.ids.insert(tot.burned.ids.end(), pre.burn_ids.begin(), pre.burn_ids.end());
        r.entries.push_back(std::move(entry));
    }

    for (auto& [type, tot] : r.totals) {
        U256 in = addOrThrow(addOrThrow(tot.minted.amount, tot.produced.amount), tot.hidden_from_clear.amount);
        if (auto h = U256::checkedSub(in, tot.consumed.amount)) tot.hidden = *h;
        tot.open = U256::checkedSub(tot.revealed.amount, tot.hidden_from_clear.amount).value_or(U256{});
        for (Value* v : {&tot.minted, &tot.burned, &tot.revealed, &tot.hidden_from_clear, &tot.consumed, &tot.produced}) {
            std::sort(v->ids.begin(), v->ids.end());
        }
    }
    return r;
}

Json auditReportToJson(const AuditReport& r, const std::set<std::string>& fields) {
    for (const auto& f : fields) {
        if (!kAuditFields.contains(f)) throw Error(Errc::ParseError, "unknown audit field '" + f + "'");
    }
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        const auto& pre = e.preimage;
        const std::size_t hidden = pre.outputs.size() - e.clear_outputs;
        entries.push_back(Json{{"event_index", e.event_index},
                               {"kind", e.kind},
                               {"contract", e.contract},
                               {"sequence_no", e.sequence_no},
                               {"inputs", tokensJson(pre.inputs, 0, pre.inputs.size(), fields)},
                               {"outputs", tokensJson(pre.outputs, 0, hidden, fields)},
                               {"clear_outputs", tokensJson(pre.outputs, hidden, pre.outputs.size(), fields)},
                               {"burn_a", pre.burn_a},
                               {"burn_ids", vectorToJson(pre.burn_ids)}});
    }
    Json totals = Json::array();
    for (const auto& [type, t] : r.totals) {
        totals.push_back(Json{{"type", type},
                              {"minted", t.minted},
                              {"burned", t.burned},
                              {"revealed", t.revealed},
                              {"hidden_from_clear", t.hidden_from_clear},
                              {"consumed", t.consumed},
                              {"produced", t.produced},
                              {"hidden", optionalToJson(t.hidden)},
                              {"open", t.open}});
    }
    Json shown = Json::array();
    for (const auto& f : fields) shown.push_back(f);
    return Json{{"schema_version", kSchemaVersion},
                {"fields", std::move(shown)},
                {"entries", std::move(entries)},
                {"totals", std::move(totals)}};
}

}  // namespace zkt
