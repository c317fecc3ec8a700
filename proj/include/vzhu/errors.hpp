#ifndef VZHU_ERRORS_HPP
#define VZHU_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace vzhu {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroLeadingCoefficient : Error {
  using Error::Error;
};

struct InvalidComposition : Error {
  using Error::Error;
};

struct UnknownCoefficient : Error {
  using Error::Error;
};

struct MixedAlgebra : Error {
  using Error::Error;
};

struct NonHomogeneous : Error {
  using Error::Error;
};

struct NonHomogeneousParity : Error {
  using Error::Error;
};

struct OutOfAmbient : Error {
  using Error::Error;
};

struct InternalMismatch : Error {
  using Error::Error;
};

struct NotScalar : Error {
  using Error::Error;
};

// A hypothesis of an operation does not hold on the given input.
struct PreconditionFailed : Error {
  using Error::Error;
};

struct TruncationEscape : Error {
  explicit TruncationEscape(std::string product)
      : Error("truncation escape: " + product), offending(std::move(product)) {}
  std::string offending;
};

struct ParseError : Error {
  ParseError(std::size_t pos, std::vector<std::string> exp, const std::string& found)
      : Error(describe(pos, exp, found)), position(pos), expected(std::move(exp)) {}

  std::size_t position;
  std::vector<std::string> expected;

 private:
  static std::string describe(std::size_t pos, const std::vector<std::string>& exp,
                              const std::string& found) {
    std::string msg = "parse error at position " + std::to_string(pos) + ": expected ";
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (i) msg += i + 1 == exp.size() ? " or " : ", ";
      msg += exp[i];
    }
    msg += ", found " + (found.empty() ? std::string("end of input") : "'" + found + "'");
    return msg;
  }
};

}  // namespace vzhu

#endif  // VZHU_ERRORS_HPP
