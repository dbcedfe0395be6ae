#pragma once

// JSON text with every floating-point number at 17 significant digits;
// non-finite numbers become null.

#include <string>

#include <nlohmann/json.hpp>

namespace robincap {

using Json = nlohmann::ordered_json;

std::string json17(const Json& j);

}  // namespace robincap
