#include "fracspec/geometry/interval_union.hpp"

#include "fracspec/common/errors.hpp"

#include <algorithm>

namespace fracspec::geometry {

IntervalUnion::IntervalUnion(std::vector<Interval> intervals) {
    for (const auto& iv : intervals)
        if (iv.length <= 0) throw DomainError("interval lengths must be positive");
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.start < b.start; });
    intervals_.reserve(intervals.size());
    for (auto& iv : intervals) {
        if (!intervals_.empty() && iv.start <= intervals_.back().end()) {
            auto& last = intervals_.back();
            const Rational end = std::max(last.end(), iv.end());
            last.length = end - last.start;
        } else {
            intervals_.push_back(std::move(iv));
        }
    }
}

Rational IntervalUnion::measure() const {
    Rational total = 0;
    for (const auto& iv : intervals_) total += iv.length;
    return total;
}

IntervalUnion IntervalUnion::fattened(const Rational& eps) const {
    if (eps <= 0) throw DomainError("eps must be positive");
    std::vector<Interval> grown;
    grown.reserve(intervals_.size());
    for (const auto& iv : intervals_) grown.push_back({iv.start - eps, iv.length + 2 * eps});
    return IntervalUnion(std::move(grown));
}

bool IntervalUnion::contains(const Rational& x) const {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                               [](const Rational& v, const Interval& iv) { return v < iv.start; });
    if (it == intervals_.begin()) return false;
    --it;
    return x <= it->end();
}

bool IntervalUnion::contains(const IntervalUnion& other) const {
    std::size_t k = 0;
    for (const auto& iv : other.intervals_) {
        while (k < intervals_.size() && intervals_[k].end() < iv.start) ++k;
        if (k == intervals_.size()) return false;
        if (iv.start < intervals_[k].start || iv.end() > intervals_[k].end()) return false;
    }
    return true;
}

std::vector<std::pair<double, double>> IntervalUnion::to_double() const {
    std::vector<std::pair<double, double>> out;
    out.reserve(intervals_.size());
    for (const auto& iv : intervals_) out.emplace_back(fracspec::to_double(iv.start), fracspec::to_double(iv.end()));
    return out;
}

}  // namespace fracspec::geometry
