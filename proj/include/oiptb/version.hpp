#ifndef OIPTB_VERSION_HPP
#define OIPTB_VERSION_HPP

namespace oiptb {
inline constexpr const char* version = "0.1.0";
}

#endif
