#pragma once

namespace zf {
inline constexpr const char* tool_name = "zerofree";
inline constexpr const char* tool_version = "0.1.0";
} // namespace zf
