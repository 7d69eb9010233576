#ifndef CITERANK_ERRORS_HPP
#define CITERANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace citerank {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- distribution construction / lookup ---

struct EmptyDistribution : Error {
  EmptyDistribution() : Error("citation distribution has no papers") {}
  explicit EmptyDistribution(const std::string& what) : Error(what) {}
};

struct UnknownCitationCount : Error {
  explicit UnknownCitationCount(long long cc)
      : Error("citation count " + std::to_string(cc) +
              " does not occur in the distribution") {}
  explicit UnknownCitationCount(const std::string& what) : Error(what) {}
};

struct InvalidCitationCount : Error {
  explicit InvalidCitationCount(const std::string& what) : Error(what) {}
};

// Thrown by P100/P100' when the distribution has a single unique citation
// value, so the rank scale has zero length.
struct DegenerateScale : Error {
  DegenerateScale() : Error("percentile scale is degenerate: only one unique citation value") {}
  explicit DegenerateScale(const std::string& what) : Error(what) {}
};

// --- estimation ---

struct OutOfEstimableRange : Error {
  explicit OutOfEstimableRange(const std::string& what) : Error(what) {}
};

struct OutOfRange : Error {
  explicit OutOfRange(const std::string& what) : Error(what) {}
};

// --- aggregation ---

struct NoCategories : Error {
  NoCategories() : Error("paper has no subject categories") {}
};

struct NoPapers : Error {
  NoPapers() : Error("aggregate requested over an empty paper list") {}
};

struct InvalidFraction : Error {
  explicit InvalidFraction(const std::string& what) : Error(what) {}
};

struct InvalidConfig : Error {
  explicit InvalidConfig(const std::string& what) : Error(what) {}
};

// I3 notation text that does not match the grammar; `position` is the
// 0-based character index where parsing failed.
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct NonDecreasingThresholds : Error {
  NonDecreasingThresholds()
      : Error("percentile class thresholds must be strictly decreasing") {}
};

// --- corpus ingestion / queries ---

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

struct DuplicateId : Error {
  explicit DuplicateId(const std::string& what) : Error(what) {}
};

struct EmptyCategories : Error {
  explicit EmptyCategories(const std::string& what) : Error(what) {}
};

struct UnknownUnit : Error {
  explicit UnknownUnit(const std::string& unit)
      : Error("unit \"" + unit + "\" has no papers in the corpus") {}
};

struct UnknownCell : Error {
  explicit UnknownCell(const std::string& what) : Error(what) {}
};

struct NoMatchingPapers : Error {
  NoMatchingPapers() : Error("no papers match the requested filter") {}
  explicit NoMatchingPapers(const std::string& what) : Error(what) {}
};

}  // namespace citerank

#endif  // CITERANK_ERRORS_HPP
