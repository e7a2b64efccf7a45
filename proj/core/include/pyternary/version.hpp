#ifndef PYTERNARY_VERSION_HPP
#define PYTERNARY_VERSION_HPP

namespace pyternary {

inline constexpr const char* kVersion = "0.1.0";

} // namespace pyternary

#endif
