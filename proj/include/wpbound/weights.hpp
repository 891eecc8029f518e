#pragma once

// Weight systems w = (w0,...,w4) of a weighted projective 4-space.

#include "wpbound/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wpbound {

using Weight = std::int64_t;

/// Largest accepted individual weight.
inline constexpr Weight kMaxWeight = 2147483647;

class WeightError : public std::invalid_argument {
public:
    enum class Kind { syntax, count, non_positive, too_large, not_well_formed };

    WeightError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Raised for systems where some four weights share a common factor.
/// Carries the lexicographically first offending index subset.
class NotWellFormed : public WeightError {
public:
    NotWellFormed(std::array<int, 4> indices, std::array<Weight, 4> weights, Weight gcd);

    const std::array<int, 4>& indices() const noexcept { return indices_; }
    const std::array<Weight, 4>& subset() const noexcept { return subset_; }

private:
    std::array<int, 4> indices_;
    std::array<Weight, 4> subset_;
};

struct WellFormedness {
    bool well_formed = true;
    std::optional<std::array<int, 4>> offending;
};

/// Every 4-element subset must have gcd 1. Subsets are tried in lexicographic
/// index order, so the reported subset is the first offender in that order.
WellFormedness is_well_formed(std::span<const Weight, 5> w);

/// A sorted, well-formed weight system together with m = prod w_i and |w| = sum w_i.
class WeightVector {
public:
    /// Sorts and validates; throws WeightError / NotWellFormed.
    static WeightVector from_weights(std::array<Weight, 5> raw);

    const std::array<Weight, 5>& weights() const noexcept { return w_; }
    Weight operator[](std::size_t i) const { return w_[i]; }
    Weight largest() const noexcept { return w_[4]; }

    /// m, the product of the weights.
    const Integer& product() const noexcept { return m_; }
    /// |w|, the sum of the weights.
    Weight sum() const noexcept { return sw_; }

    /// Weights joined with `sep`, e.g. "1,1,1,2,6".
    std::string to_string(char sep = ',') const;

    bool operator==(const WeightVector& other) const { return w_ == other.w_; }

private:
    WeightVector() = default;

    std::array<Weight, 5> w_{};
    Integer m_;
    Weight sw_ = 0;
};

/// Parses "1,1,1,2,6" or "1 1 1 2 6" (mixed separators are accepted).
WeightVector parse_weights(std::string_view text);

/// Streams every sorted well-formed system with w4 <= max_weight in
/// lexicographic order.
class WellFormedEnumerator {
public:
    explicit WellFormedEnumerator(Weight max_weight);

    std::optional<WeightVector> next();

private:
    bool advance();

    Weight max_weight_;
    std::array<Weight, 5> cur_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<WeightVector> enumerate_well_formed(Weight max_weight);

}  // namespace wpbound
