#pragma once

#include <stdexcept>
#include <string>

namespace backbone {

// Bad caller input: malformed files, violated preconditions, unknown ids.
// The CLI maps this to exit code 2.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A guaranteed property failed to hold; always indicates a bug.
// The CLI maps this to exit code 1.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Instance generation gave up after exhausting its retry budget.
// The CLI maps this to exit code 2.
class generation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace backbone
