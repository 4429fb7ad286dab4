#ifndef SUBMAX_VERSION_HPP
#define SUBMAX_VERSION_HPP

#include <string_view>

namespace submax {

inline constexpr std::string_view kVersion = "submax/0.1.0";

}  // namespace submax

#endif
