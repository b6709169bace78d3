#pragma once

#include "fracspec/common/numeric.hpp"

#include <cstddef>
#include <vector>

namespace fracspec::geometry {

struct Interval {
    Rational start;
    Rational length;

    Rational end() const { return start + length; }
};

/// Exact finite union of closed intervals on the line, kept sorted with
/// touching or overlapping members merged.
class IntervalUnion {
public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<Interval> intervals);

    const std::vector<Interval>& intervals() const noexcept { return intervals_; }
    std::size_t size() const noexcept { return intervals_.size(); }
    bool empty() const noexcept { return intervals_.empty(); }

    /// Total Lebesgue measure.
    Rational measure() const;

    /// The eps-neighborhood {x : d(x, set) < eps}. Open endpoints are not
    /// tracked; the measure is the same.
    IntervalUnion fattened(const Rational& eps) const;

    bool contains(const Rational& x) const;
    /// True when every interval of `other` lies inside one interval of this union.
    bool contains(const IntervalUnion& other) const;

    std::vector<std::pair<double, double>> to_double() const;

private:
    std::vector<Interval> intervals_;
};

}  // namespace fracspec::geometry
