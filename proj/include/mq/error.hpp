#pragma once

#include <stdexcept>
#include <string>

namespace mq {

// Error categories; the CLI maps them onto exit codes.
enum class errc {
  internal = 1,       // broken invariant inside the library
  parse = 2,          // malformed input data
  inconsistency = 3,  // certified bounds crossed (unsound input certificate)
  hypothesis = 4,     // a theorem hypothesis failed for the given input
};

class error : public std::runtime_error {
public:
  error(errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

struct parse_error : error {
  explicit parse_error(const std::string& m) : error(errc::parse, m) {}
};

struct hypothesis_error : error {
  explicit hypothesis_error(const std::string& m) : error(errc::hypothesis, m) {}
};

struct inconsistency_error : error {
  explicit inconsistency_error(const std::string& m) : error(errc::inconsistency, m) {}
};

struct internal_error : error {
  explicit internal_error(const std::string& m) : error(errc::internal, m) {}
};

}  // namespace mq
