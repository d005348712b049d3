#pragma once

#include <stdexcept>
#include <string>

namespace tropigeo {

// An operation was asked to act outside its mathematical domain: boundary
// point where an interior one is required, collinear triple, invalid side
// lengths, oversized matrix, and the like.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A textual input could not be read.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tropigeo
