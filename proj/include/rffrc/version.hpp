#pragma once

namespace rffrc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rffrc
