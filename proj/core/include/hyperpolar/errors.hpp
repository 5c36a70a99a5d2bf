#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperpolar {

enum class ErrorKind {
  InvalidInput,   // malformed or out-of-contract input (CLI exit code 2)
  Numerical,      // a pipeline stage failed on valid-looking data (exit code 3)
};

// Every pipeline failure names its stage and, where meaningful, the sample
// index that triggered it.
class Error : public std::runtime_error {
public:
  static constexpr std::size_t no_sample = static_cast<std::size_t>(-1);

  Error(ErrorKind kind, std::string stage, std::string message,
        std::size_t sample = no_sample)
      : std::runtime_error(format(stage, message, sample)),
        kind_(kind),
        stage_(std::move(stage)),
        sample_(sample) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }
  std::size_t sample() const noexcept { return sample_; }

private:
  static std::string format(const std::string& stage, const std::string& msg,
                            std::size_t sample) {
    std::string out = stage + ": " + msg;
    if (sample != no_sample) out += " (sample " + std::to_string(sample) + ")";
    return out;
  }

  ErrorKind kind_;
  std::string stage_;
  std::size_t sample_;
};

inline Error input_error(std::string stage, std::string message,
                         std::size_t sample = Error::no_sample) {
  return Error(ErrorKind::InvalidInput, std::move(stage), std::move(message), sample);
}

inline Error numerical_error(std::string stage, std::string message,
                             std::size_t sample = Error::no_sample) {
  return Error(ErrorKind::Numerical, std::move(stage), std::move(message), sample);
}

}  // namespace hyperpolar
