#pragma once

#include <stdexcept>
#include <string>

namespace hhorn {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Ground set exceeds a compile-time or oracle cap.
class GroundTooLarge : public Error {
 public:
  using Error::Error;
};

class GroundMismatch : public Error {
 public:
  GroundMismatch() : Error("operands are defined over different ground sets") {}
  using Error::Error;
};

class NonSperner : public Error {
 public:
  NonSperner() : Error("hypergraph is not Sperner") {}
  using Error::Error;
};

class EmptyEdge : public Error {
 public:
  EmptyEdge() : Error("hypergraph contains the empty edge") {}
  using Error::Error;
};

class HeadInBody : public Error {
 public:
  HeadInBody() : Error("clause head occurs in its body") {}
  using Error::Error;
};

class OverlappingConstraint : public Error {
 public:
  OverlappingConstraint() : Error("included and excluded sets overlap") {}
  using Error::Error;
};

class NotDefiniteHorn : public Error {
 public:
  NotDefiniteHorn() : Error("function is not definite Horn") {}
  using Error::Error;
};

class MalformedWitness : public Error {
 public:
  using Error::Error;
};

}  // namespace hhorn
