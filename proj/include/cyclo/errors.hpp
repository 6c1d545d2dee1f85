#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CompositionNotZero : Error {
  using Error::Error;
};
struct NotAChainMapOnClasses : Error {
  using Error::Error;
};
struct NotCommutative : Error {
  using Error::Error;
};
struct NotCocommutative : Error {
  using Error::Error;
};
struct NotInvolutive : Error {
  using Error::Error;
};
struct NotALieMeasuring : Error {
  using Error::Error;
};
struct NotALeibnizAlgebra : Error {
  using Error::Error;
};
struct RelationNotPreserved : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};

struct TruncationTooLarge : Error {
  std::size_t dim;
  std::size_t cap;
  TruncationTooLarge(const std::string& what, std::size_t d, std::size_t c)
      : Error(what + ": dimension " + std::to_string(d) + " exceeds cap " + std::to_string(c)),
        dim(d), cap(c) {}
};

}  // namespace cyclo
