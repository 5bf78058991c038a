#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galchar {

enum class ErrorKind {
  parse,      // malformed textual input
  domain,     // mathematically invalid argument (non-coprime ell, order mismatch, ...)
  size,       // a configured cap was exceeded
  invariant,  // an object violates its own invariants (corrupted table, ...)
  scope,      // input outside what the library computes
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(ErrorKind::parse, "parse error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what) : Error(ErrorKind::size, what) {}
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(ErrorKind::invariant, what) {}
};

class ScopeError : public Error {
 public:
  explicit ScopeError(const std::string& what) : Error(ErrorKind::scope, what) {}
};

}  // namespace galchar
