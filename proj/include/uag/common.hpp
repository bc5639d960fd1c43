#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace uag {

using Int = boost::multiprecision::cpp_int;

enum class ErrorKind {
  Syntax,
  DuplicateSymbol,
  UnknownSymbol,
  ArityMismatch,
  LanguageMismatch,
  VarietyMismatch,
  MissingBinding,
  EmptySeedNoConstants,
  EmptySet,
  Unbounded,
  ResourceLimit,
  BadArgument,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::LanguageMismatch: return "LanguageMismatch";
    case ErrorKind::VarietyMismatch: return "VarietyMismatch";
    case ErrorKind::MissingBinding: return "MissingBinding";
    case ErrorKind::EmptySeedNoConstants: return "EmptySeedNoConstants";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Resource caps shared by the enumeration-heavy operations.
struct Limits {
  long long tuple_cap = 2'000'000;
  long long elem_cap = 100'000;
  long long node_budget = 50'000'000;
};

enum class Tribool { False, True, Unknown };

inline const char* tribool_name(Tribool t) {
  switch (t) {
    case Tribool::False: return "false";
    case Tribool::True: return "true";
    case Tribool::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace uag
