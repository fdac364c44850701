#ifndef TPK_ERRORS_HPP
#define TPK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpk {

// A requested size/parameter exceeds a documented limit of the library.
class capability_error : public std::runtime_error {
public:
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text; offset is the byte position of the first bad byte.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    size_t offset;
};

// A construction failed its own validity gate (girth check, certificate).
class construction_error : public std::runtime_error {
public:
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tpk

#endif
