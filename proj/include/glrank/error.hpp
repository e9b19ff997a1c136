#pragma once

#include <stdexcept>
#include <string>

namespace glrank {

enum class ErrorKind {
  InvalidInput,
  ResourceLimit,
  NoRankKConstituent,
  Unsupported,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InvalidInput, what);
}

// Raised when a configurable cap is exceeded; the message names the cap.
[[noreturn]] inline void over_cap(const std::string& cap, long long limit,
                                  long long wanted) {
  throw Error(ErrorKind::ResourceLimit,
              cap + " exceeded: limit " + std::to_string(limit) + ", needed " +
                  std::to_string(wanted));
}

}  // namespace glrank
