#ifndef DUNKL_VERSION_HPP
#define DUNKL_VERSION_HPP

#define DUNKL_VERSION_MAJOR 0
#define DUNKL_VERSION_MINOR 1
#define DUNKL_VERSION_PATCH 0
#define DUNKL_VERSION_STRING "0.1.0"

namespace dunkl {
inline const char* version() { return DUNKL_VERSION_STRING; }
}  // namespace dunkl

#endif
