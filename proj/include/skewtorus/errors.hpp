#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewtorus {

/// Mismatched basis declarations, invalid config values, empty basis where one
/// is required.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in the angle / polynomial / point grammar.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// An angle has a denominator that does not divide L!.
class TruncationError : public std::runtime_error {
public:
  TruncationError(const std::string &what, int required_level)
      : std::runtime_error(what), required_level_(required_level) {}

  /// Smallest level L whose factorial absorbs the offending denominator, or -1
  /// if none was found below the search cap.
  int required_level() const noexcept { return required_level_; }

private:
  int required_level_;
};

/// A component sequence fails (H.0) or the torsion congruence at index k.
class MembershipError : public std::runtime_error {
public:
  MembershipError(const std::string &what, int index)
      : std::runtime_error(what), index_(index) {}

  int index() const noexcept { return index_; }

private:
  int index_;
};

/// A pair of elements does not satisfy the coset conditions a function needs.
class RelationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DegenerateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace skewtorus
