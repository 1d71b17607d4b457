#pragma once

#include <stdexcept>
#include <string>

namespace hdmi {

// Mirrors the status codes of the public C API (include/hdmi/hdmi.h).
enum class Status : int {
  Ok = 0,
  IoError = 1,
  ParseError = 2,
  ShapeError = 3,
  InvalidArgument = 4,
  NumericError = 5,
  Internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}

  Status status() const { return status_; }

 private:
  Status status_;
};

inline void require(bool condition, Status status, const std::string& message) {
  if (!condition) throw Error(status, message);
}

}  // namespace hdmi
