#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace fracspec::tauberian {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PInterval {
    double lo = 1.0;
    double hi = kInfinity;
    bool lo_closed = true;
    bool hi_closed = false;

    bool contains(const PInterval& other) const noexcept;
    std::string to_string() const;
};

struct DimensionInput {
    double estimate = 0.0;
    double low = 0.0;
    double high = 0.0;

    static DimensionInput exact(double value) { return {value, value, value}; }
};

struct DensityVerdict {
    std::string theorem;  ///< radial-motion-span, translation-span, packing-sufficient-condition, motion-group-reference
    std::string formula;
    bool reference = false;  ///< prior work, listed but not verified here
    bool conclusive = false;
    PInterval interval;     ///< at the estimate
    PInterval guaranteed;   ///< at the worst end of the CI
    bool guaranteed_conclusive = false;
    PInterval widest;       ///< at the best end of the CI
    DimensionInput dimension;
    int n = 1;
    std::string notes;
};

/// Rows from the radial-set dimension beta (dimension of S in R+).
DensityVerdict radial_motion_verdict(const DimensionInput& beta, int n);
/// Rows from the zero-set dimension alpha.
DensityVerdict translation_verdict(const DimensionInput& alpha, int n);
DensityVerdict packing_verdict(const DimensionInput& alpha, int n);
/// Four prior-work rows for the motion group, never asserted.
std::vector<DensityVerdict> reference_verdicts(int n);

std::vector<DensityVerdict> build_verdicts(int n, std::optional<DimensionInput> beta, std::optional<DimensionInput> alpha);

std::string verdicts_to_json(const std::vector<DensityVerdict>& verdicts);

}  // namespace fracspec::tauberian
