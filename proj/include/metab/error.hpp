#pragma once

#include <stdexcept>
#include <string>

namespace metab {

  //! Base class for every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed word, vector or file contents.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  //! Operands built over different ranks (number of generators).
  class RankMismatch : public Error {
   public:
    RankMismatch(std::size_t lhs, std::size_t rhs)
        : Error("rank mismatch: " + std::to_string(lhs) + " vs "
                + std::to_string(rhs)) {}
  };

  //! An operation that requires a closed 1-chain received one with a
  //! nonzero boundary.
  class NotACycle : public Error {
   public:
    NotACycle() : Error("edge flow is not a cycle (nonzero boundary)") {}
  };

  //! Any other violated precondition (axis out of range, bad level, ...).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  namespace detail {
    inline void check_rank(std::size_t lhs, std::size_t rhs) {
      if (lhs != rhs) {
        throw RankMismatch(lhs, rhs);
      }
    }
  }  // namespace detail

}  // namespace metab
