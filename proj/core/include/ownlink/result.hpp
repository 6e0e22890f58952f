#pragma once

#include <string>
#include <utility>
#include <variant>

namespace ownlink {

// Rejections are ordinary values in this system (a denied request is a
// protocol outcome, not an exceptional condition), so fallible operations
// return Result<T> instead of throwing.
struct Error {
  std::string code;     // stable machine-readable code, e.g. "not_owner"
  std::string message;  // human-readable diagnostic
};

inline Error err(std::string code, std::string message) {
  return Error{std::move(code), std::move(message)};
}

template <class T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Error error) : v_(std::move(error)) {}

  [[nodiscard]] bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  T& value() { return std::get<T>(v_); }
  const T& value() const { return std::get<T>(v_); }
  const Error& error() const { return std::get<Error>(v_); }

 private:
  std::variant<T, Error> v_;
};

struct Unit {};

using Status = Result<Unit>;

inline Status ok_status() { return Status(Unit{}); }

}  // namespace ownlink
