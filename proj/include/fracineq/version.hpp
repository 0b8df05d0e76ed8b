#pragma once

namespace fracineq {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int report_schema_version = 1;

}  // namespace fracineq
