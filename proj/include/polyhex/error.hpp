#pragma once

#include <stdexcept>
#include <string>

namespace polyhex {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SelfLoop : public Error {
public:
  using Error::Error;
};

class DuplicateEdge : public Error {
public:
  using Error::Error;
};

class VertexOutOfRange : public Error {
public:
  using Error::Error;
};

/// A nanotube parameter or closed-form argument lies outside the valid domain.
class InvalidSpec : public Error {
public:
  using Error::Error;
};

/// An edge function is undefined for the given degree pair (e.g. AZI at (1,1)).
class UndefinedTerm : public Error {
public:
  using Error::Error;
};

class RationalOverflow : public Error {
public:
  using Error::Error;
};

class SingularSystem : public Error {
public:
  using Error::Error;
};

class InconsistentSamples : public Error {
public:
  using Error::Error;
};

} // namespace polyhex
