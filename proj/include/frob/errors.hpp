#pragma once

#include <stdexcept>
#include <string>

namespace frob {

/// Thrown when a computation would exceed a configured resource cap
/// (simplex counts, composition counts, boundary-matrix sizes).
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the JSON readers; carries the path of the offending value.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace frob
