#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgq {

// Malformed textual input; offset is the byte position of the failure.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::invalid_argument("syntax error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace sgq
