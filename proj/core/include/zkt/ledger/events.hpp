#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zkt/crypto/json.hpp"

namespace zkt {

/// Something a contract announces. The payload holds public fields only.
struct Event {
    std::string kind;
    Address contract;
    std::uint64_t sequence_no = 0;  // per emitting contract
    Json payload;
};

void to_json(Json& j, const Event& e);
void from_json(const Json& j, Event& e);

using EventList = std::vector<Event>;

}  // namespace zkt
