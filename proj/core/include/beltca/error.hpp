#pragma once

#include <stdexcept>

namespace beltca {

/// Malformed text input (words, configurations, alphabets, config documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace beltca
