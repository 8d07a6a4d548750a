#pragma once

namespace curvsym {

inline constexpr const char* engine_version = "0.1.0";
inline constexpr int report_schema_version = 1;

} // namespace curvsym
