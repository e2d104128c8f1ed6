#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tperfect/color.hpp"
#include "tperfect/holes.hpp"
#include "tperfect/polytope.hpp"
#include "tperfect/recognize.hpp"
#include "tperfect/tminor.hpp"

namespace tperfect {

using Json = nlohmann::ordered_json;

/// 64-bit FNV-1a of the raw input bytes, as "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view bytes);

Json to_json(const Hole& h);
Json to_json(const TMinorCertificate& c);
Json to_json(const TMinorResult& r);
Json to_json(const Certificate& c);
Json to_json(const Verdict& v);
Json to_json(const Coloring& c);
Json to_json(const StrongCheckReport& r);
Json to_json(const WCover& c);

/// Inverse of to_json for certificates; throws GraphError on malformed input.
Certificate certificate_from_json(const Json& j);
Verdict verdict_from_json(const Json& j);

}  // namespace tperfect
