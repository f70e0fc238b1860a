// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An input lies outside a model's validity domain (f < 1 GHz, d < 1 m, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// The least-squares design matrix is rank deficient.
class SingularDesignError : public Error {
public:
  using Error::Error;
};

/// Every sample sits at the 1 m anchor so no distance slope can be fitted.
class DegenerateGeometryError : public Error {
public:
  using Error::Error;
};

/// CIF distance coefficient is too close to zero for b = (n b) / n to be meaningful.
class UnstableParameterError : public Error {
public:
  using Error::Error;
};

class NoSolutionError : public Error {
public:
  using Error::Error;
};

class BelowAnchorError : public Error {
public:
  using Error::Error;
};

class EmptyReportError : public Error {
public:
  using Error::Error;
};

/// CSV header does not match the interchange format.
class SchemaError : public Error {
public:
  SchemaError(const std::string& column, const std::string& what)
      : Error(what), column_(column) {}
  const std::string& column() const noexcept { return column_; }

private:
  std::string column_;
};

/// A CSV row carries a value that violates a sample invariant.
class ValidationError : public Error {
public:
  ValidationError(std::size_t row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

private:
  std::size_t row_;
};

/// A CSV cell could not be decoded.
class ParseError : public Error {
public:
  ParseError(std::size_t row, const std::string& column, const std::string& what)
      : Error("row " + std::to_string(row) + ", column " + column + ": " + what),
        row_(row),
        column_(column) {}
  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

private:
  std::size_t row_;
  std::string column_;
};

} // namespace plm
