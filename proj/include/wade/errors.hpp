#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wade {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two series (or a series and a grid) that must share a grid do not.
class GridMismatchError : public Error {
public:
  using Error::Error;
};

/// The price is inside the exclusion band around the pivot, where the
/// optimal-demand closed form is singular.
class SingularPriceError : public Error {
public:
  SingularPriceError(double price, double pivot, double band)
      : Error("singular price " + std::to_string(price) +
              ": within " + std::to_string(band) + " of the pivot " +
              std::to_string(pivot)) {}

  SingularPriceError(double price, double pivot, double band,
                     std::size_t node, double time)
      : Error("singular price " + std::to_string(price) + " at node " +
              std::to_string(node) + " (t = " + std::to_string(time) +
              "): within " + std::to_string(band) + " of the pivot " +
              std::to_string(pivot)),
        node_(node), time_(time) {}

  /// Grid node that triggered the error, or npos for pointwise calls.
  std::size_t node() const noexcept { return node_; }
  double time() const noexcept { return time_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::size_t node_ = npos;
  double time_ = 0.0;
};

/// An even root of a negative radicand was requested by the closed form.
class NonRealRootError : public Error {
public:
  using Error::Error;
};

/// Malformed CSV input; carries the 1-based line number.
class CsvError : public Error {
public:
  CsvError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class DuplicateYearError : public CsvError {
public:
  DuplicateYearError(int year, std::size_t line)
      : CsvError("duplicate year " + std::to_string(year), line),
        year_(year) {}
  int year() const noexcept { return year_; }

private:
  int year_;
};

} // namespace wade
