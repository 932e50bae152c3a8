#pragma once

#include <stdexcept>
#include <string>

namespace quadnet {

enum class ErrorKind {
  DegenerateResultant,
  Unsupported,
  NotStabilized,
  UnclassifiedExtensionPoint,
  Undecidable,
  PointNotOnQuadric,
  DegenerateGale,
  NoSmoothMember,
  ProvenanceInvalid,
  SingularMatrix,
  ZeroInput,
  MixedExtension,
  LengthMismatch,
  Degenerate,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Mathematical-domain failure. Carries a machine-readable kind so callers
/// (the CLI in particular) can map it onto exit codes.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class ParseErrorKind { SyntaxError, UnknownVariable, NonHomogeneous };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& what)
      : std::runtime_error(what), kind_(kind), offset_(offset) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
};

}  // namespace quadnet
