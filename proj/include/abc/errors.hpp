#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abc {

enum class ErrorKind {
  DivergentMoment,   // integral of r^lambda u^2 does not exist
  RecurrenceWindow,  // a recurrence step lies outside lambda > -(2 alpha + 1)
  NotRational,       // exact arithmetic requested but mu0 has no exact value
  SWaveExcluded,     // identity undefined at alpha = 0
  NotCircular,       // circular-orbit statistics require n = 0
  OracleMismatch,    // the oracle's two evaluation paths disagree
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct DivergentMoment : Error {
  explicit DivergentMoment(const std::string& what)
      : Error(ErrorKind::DivergentMoment, what) {}
};

struct RecurrenceWindow : Error {
  explicit RecurrenceWindow(const std::string& what)
      : Error(ErrorKind::RecurrenceWindow, what) {}
};

struct NotRational : Error {
  explicit NotRational(const std::string& what)
      : Error(ErrorKind::NotRational, what) {}
};

struct SWaveExcluded : Error {
  explicit SWaveExcluded(const std::string& what)
      : Error(ErrorKind::SWaveExcluded, what) {}
};

struct NotCircular : Error {
  explicit NotCircular(const std::string& what)
      : Error(ErrorKind::NotCircular, what) {}
};

struct OracleMismatch : Error {
  explicit OracleMismatch(const std::string& what)
      : Error(ErrorKind::OracleMismatch, what) {}
};

}  // namespace abc
