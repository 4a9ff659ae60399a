#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lolab/geometry.hpp"

namespace lolab {

/// Exact coordinates: vector i is (pairs[i].first/scale, pairs[i].second/scale)
/// with p^2 + q^2 == scale^2 exactly in integers.
struct RationalCoords {
    std::int64_t scale{1};
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

/// An ordered sequence of unit vectors, optionally carrying an exact
/// integer-scaled representation (used for band-free boundary classification).
class Configuration {
  public:
    static Configuration from_vectors(const std::vector<Vec2>& vs);
    static Configuration from_angles(const std::vector<double>& angles);
    static Configuration from_units(std::vector<UnitVector> vs);
    static Configuration from_rational(RationalCoords rc);

    std::size_t size() const { return vecs_.size(); }
    const UnitVector& operator[](std::size_t i) const { return vecs_[i]; }
    const std::vector<UnitVector>& vectors() const { return vecs_; }

    bool is_exact() const { return rational_.has_value(); }
    const RationalCoords& rational() const { return *rational_; }

    /// Concatenation of this configuration with itself (the law of X - X' over
    /// V equals the law of a signed sum over V || V).
    Configuration doubled() const;

    /// Copy with the vectors at the given (sorted, distinct) indices removed.
    Configuration without(const std::vector<int>& sorted_indices) const;

  private:
    Configuration() = default;
    std::vector<UnitVector> vecs_;
    std::optional<RationalCoords> rational_;
};

}  // namespace lolab
