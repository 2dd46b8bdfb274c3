#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vkcgs {

/// A general-position (or spherical genericity) violation. Carries the
/// indices of the offending points/vectors, relative to the producing call
/// unless a caller has remapped them to configuration indices.
class DegenerateConfiguration : public std::runtime_error {
  public:
    explicit DegenerateConfiguration(const std::string& what,
                                     std::vector<int> indices = {})
        : std::runtime_error(what), indices_(std::move(indices)) {}

    const std::vector<int>& indices() const { return indices_; }

    DegenerateConfiguration withIndices(std::vector<int> indices) const {
        return DegenerateConfiguration(what(), std::move(indices));
    }

  private:
    std::vector<int> indices_;
};

struct InvalidDimension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyComplement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoBoundary : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WrongParity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverlappingSubcomplexes : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RetryCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedStatementDimension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vkcgs
