#ifndef TTB_VERSION_HPP
#define TTB_VERSION_HPP

namespace ttb {

inline constexpr const char* kVersion = "ttb 0.1.0";

} // namespace ttb

#endif
