#pragma once

#include <stdexcept>
#include <string>

namespace craiglat {

/// Failure categories. The CLI maps `capacity` to exit status 3 and every
/// other kind to exit status 2.
enum class ErrorKind {
  argument,
  parameter,
  rank,
  capacity,
  parse,
  membership,
  subcode,
  distance,
  field,
  composition,
  regime,
  domain,
  inapplicable,
  lookup,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::argument: return "argument";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::rank: return "rank";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::parse: return "parse";
    case ErrorKind::membership: return "membership";
    case ErrorKind::subcode: return "subcode";
    case ErrorKind::distance: return "distance";
    case ErrorKind::field: return "field";
    case ErrorKind::composition: return "composition";
    case ErrorKind::regime: return "regime";
    case ErrorKind::domain: return "domain";
    case ErrorKind::inapplicable: return "inapplicable";
    case ErrorKind::lookup: return "lookup";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace craiglat
