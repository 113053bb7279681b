#pragma once

#include <stdexcept>
#include <string>

namespace afa {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input document (JSON syntax or schema violation). The message
// carries whatever location information the underlying parser produced.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace afa
