#pragma once

#include <stdexcept>
#include <string>

namespace fdare {

// Base class; the CLI maps each subclass onto an exit code.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class domain_error : public error {
public:
  using error::error;
};

class parse_error : public error {
public:
  using error::error;
};

class condition_error : public error {
public:
  condition_error(const std::string& condition, const std::string& what)
      : error(what), condition_(condition) {}
  const std::string& condition() const noexcept { return condition_; }

private:
  std::string condition_;
};

class numeric_error : public error {
public:
  explicit numeric_error(const std::string& what, double achieved = 0.0)
      : error(what), achieved_(achieved) {}
  /// error estimate reached before giving up
  double achieved() const noexcept { return achieved_; }

private:
  double achieved_;
};

} // namespace fdare
