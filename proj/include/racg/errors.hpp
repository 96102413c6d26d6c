#pragma once

#include <stdexcept>
#include <string>

namespace racg {

/// A standing hypothesis does not hold for the given input (reducible
/// system, too few generators, thin building). CLI maps this to exit code 2.
class hypothesis_error : public std::runtime_error {
public:
  explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured capacity (ball element cap, clique cap, sweep rank cap) was
/// exceeded. CLI maps this to exit code 3.
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Product support escaped the truncation ball; names the offending word.
class ball_overflow_error : public capacity_error {
public:
  explicit ball_overflow_error(const std::string& what) : capacity_error(what) {}
};

} // namespace racg
