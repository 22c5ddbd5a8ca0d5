#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace topolab {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Ground set or corpus bound outside what the implementation supports.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

class PointOutOfRange : public Error {
 public:
  using Error::Error;
};

// Ideal indices do not fit the space's ground set.
class GroundSetMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class UnknownSlotName : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A cross-check between two evaluation routes disagreed, or a witness or
// violation failed replay. Always a bug, never a user error.
class InternalCheckFailure : public Error {
 public:
  using Error::Error;
};

// A set family failed the topology axioms.
class NotATopology : public Error {
 public:
  enum class Reason {
    missing_empty,
    missing_full,
    union_absent,
    intersection_absent,
    out_of_ground,
  };

  NotATopology(Reason reason, const std::string& msg, std::uint64_t a = 0,
               std::uint64_t b = 0)
      : Error(msg), reason_(reason), a_(a), b_(b) {}

  Reason reason() const { return reason_; }
  // The violating pair (bit patterns), meaningful for the *_absent reasons.
  std::uint64_t pair_first() const { return a_; }
  std::uint64_t pair_second() const { return b_; }

 private:
  Reason reason_;
  std::uint64_t a_;
  std::uint64_t b_;
};

}  // namespace topolab
