#pragma once

#include <stdexcept>
#include <string>

namespace acs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Piece count or vertex count outside the supported range.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A seed relation does not generate the requested system.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Bad-word search exhausted its length cap.
class NoBoundError : public Error {
 public:
  NoBoundError(const std::string& msg, std::string longest_bad_word)
      : Error(msg), longest_bad_word_(std::move(longest_bad_word)) {}
  const std::string& longest_bad_word() const { return longest_bad_word_; }

 private:
  std::string longest_bad_word_;
};

/// A single-cycle orbit cannot be realized; the generating set is not minimal.
class NonMinimalGensetError : public Error {
 public:
  NonMinimalGensetError(const std::string& msg, int removable_pair)
      : Error(msg), removable_pair_(removable_pair) {}
  /// Index of a relation pair that can be dropped, or -1 if none was isolated.
  int removable_pair() const { return removable_pair_; }

 private:
  int removable_pair_;
};

/// Checked integer arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text or JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace acs
