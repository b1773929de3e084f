#pragma once

#include "vendor_json.hpp"
#include "zcpn/kernel_lift.hpp"

namespace zcpn {

// Integers serialize as JSON numbers when they fit in 64 bits and as decimal
// strings otherwise; parsers accept both.

nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GroupRingElem& a);
GroupRingElem group_ring_from_json(const nlohmann::json& j);

nlohmann::json to_json(const XAdicElem& a);
XAdicElem xadic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CycInt& a);
CycInt cyc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const UnitSystem& s);

nlohmann::json to_json(const LevelTable& t);
LevelTable level_table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AssemblyResult& r);

}  // namespace zcpn
