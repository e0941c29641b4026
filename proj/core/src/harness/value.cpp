#include "zkt/harness/value.hpp"

#include "zkt/error.hpp"
#include "zkt/token/envelopes.hpp"

namespace zkt {

void to_json(Json& j, const Value& v) { j = Json{{"amount", v.amount}, {"ids", vectorToJson(v.ids)}}; }

Value valueFromJson(const Json& j) {
    Value v;
    if (j.contains("amount")) v.amount = u256FromJson(j["amount"]);
    if (j.contains("ids")) {
        if (!j["ids"].is_array()) throw Error(Errc::ParseError, "ids must be an array");
        for (const auto& id : j["ids"]) v.ids.push_back(u256FromJson(id));
    }
    return v;
}

}  // namespace zkt
