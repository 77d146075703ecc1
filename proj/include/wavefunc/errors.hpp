#pragma once

#include <stdexcept>
#include <string>

namespace wavefunc {

/// Bad input data: unreadable/malformed files, corrupt model documents,
/// degenerate samples.  Distinct from std::invalid_argument (caller bugs
/// like a negative degree) so the CLI can map the two to different exit
/// codes.
class DataError : public std::runtime_error {
  public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// An adaptive integration failed to reach the requested tolerance within
/// its subdivision limit.
class QuadratureError : public std::runtime_error {
  public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wavefunc
