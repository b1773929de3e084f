#pragma once

// Public headers carry nlohmann::json values inside certificates and results;
// include the vendored single header directly.
#include <json.hpp>
