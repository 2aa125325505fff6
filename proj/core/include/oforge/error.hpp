#pragma once

#include <stdexcept>
#include <string>

namespace oforge {

// Error classes map to distinct CLI exit codes (parse=2, carrier=3, bound=4).
enum class ErrorClass { input = 1, parse = 2, carrier = 3, bound = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
  ErrorClass cls() const { return cls_; }

 private:
  ErrorClass cls_;
};

[[noreturn]] inline void fail_input(const std::string& msg) { throw Error(ErrorClass::input, msg); }
[[noreturn]] inline void fail_parse(const std::string& msg) { throw Error(ErrorClass::parse, msg); }
[[noreturn]] inline void fail_carrier(const std::string& msg) { throw Error(ErrorClass::carrier, msg); }
[[noreturn]] inline void fail_bound(const std::string& msg) { throw Error(ErrorClass::bound, msg); }

}  // namespace oforge
