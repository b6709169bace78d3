#include "fracspec/tauberian/verdict.hpp"

#include "fracspec/common/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace fracspec::tauberian {

namespace {

std::string endpoint(double v) {
    if (std::isinf(v)) return "inf";
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

nlohmann::json interval_json(const PInterval& i) {
    return {{"lo", i.lo},
            {"hi", std::isinf(i.hi) ? nlohmann::json(nullptr) : nlohmann::json(i.hi)},
            {"lo_closed", i.lo_closed},
            {"hi_closed", i.hi_closed},
            {"text", i.to_string()}};
}

void check_input(const DimensionInput& d) {
    if (!std::isfinite(d.estimate) || !std::isfinite(d.low) || !std::isfinite(d.high))
        throw DomainError("dimension estimate must be finite");
    if (d.low > d.estimate || d.estimate > d.high) throw DomainError("dimension CI must bracket the estimate");
    if (d.low < 0.0) throw DomainError("dimension estimate must be non-negative");
}

constexpr const char* kNoConclusion = "no conclusion from these theorems";

}  // namespace

bool PInterval::contains(const PInterval& other) const noexcept {
    const bool left = lo < other.lo || (lo == other.lo && (lo_closed || !other.lo_closed));
    const bool right = hi > other.hi || (hi == other.hi && (hi_closed || !other.hi_closed));
    return left && right;
}

std::string PInterval::to_string() const {
    return std::string(lo_closed ? "[" : "(") + endpoint(lo) + ", " + endpoint(hi) + (hi_closed ? "]" : ")");
}

DensityVerdict radial_motion_verdict(const DimensionInput& beta, int n) {
    check_input(beta);
    if (n < 1) throw DomainError("n must be positive");
    DensityVerdict v;
    v.theorem = "radial-motion-span";
    v.formula = "2n/(n+1-beta) <= p <= 2";
    v.dimension = beta;
    v.n = n;
    auto at = [n](double b) { return PInterval{2.0 * n / (n + 1 - b), 2.0, true, true}; };
    v.conclusive = beta.estimate < 1.0;
    v.guaranteed_conclusive = beta.high < 1.0;
    if (v.conclusive) v.interval = at(beta.estimate);
    if (v.guaranteed_conclusive) v.guaranteed = at(beta.high);
    if (beta.low < 1.0) v.widest = at(beta.low);
    v.notes = v.conclusive ? "span of motions of f dense in L^p; S has finite packing beta-measure" : kNoConclusion;
    return v;
}

DensityVerdict translation_verdict(const DimensionInput& alpha, int n) {
    check_input(alpha);
    if (n < 1) throw DomainError("n must be positive");
    DensityVerdict v;
    v.theorem = "translation-span";
    v.formula = "2n/(2n-alpha) <= p < inf";
    v.dimension = alpha;
    v.n = n;
    auto at = [n](double a) { return PInterval{2.0 * n / (2 * n - a), kInfinity, true, false}; };
    v.conclusive = alpha.estimate < n;
    v.guaranteed_conclusive = alpha.high < n;
    if (v.conclusive) v.interval = at(alpha.estimate);
    if (v.guaranteed_conclusive) v.guaranteed = at(alpha.high);
    if (alpha.low < n) v.widest = at(alpha.low);
    v.notes = v.conclusive ? "translates of f dense in L^p; zero set has finite packing alpha-measure" : kNoConclusion;
    return v;
}

DensityVerdict packing_verdict(const DimensionInput& alpha, int n) {
    auto v = translation_verdict(alpha, n);
    v.theorem = "packing-sufficient-condition";
    v.formula = "alpha <= 2n/q, 1/p + 1/q = 1";
    if (v.conclusive) v.notes = "sufficient condition for translates to span L^p, 1 <= p < inf";
    return v;
}

std::vector<DensityVerdict> reference_verdicts(int n) {
    if (n < 1) throw DomainError("n must be positive");
    const double first = 2.0 * n / (n + 1);
    const double second = n == 1 ? kInfinity : 2.0 * n / (n - 1);
    auto row = [n](std::string formula, PInterval interval, std::string condition) {
        DensityVerdict v;
        v.theorem = "motion-group-reference";
        v.formula = std::move(formula);
        v.reference = true;
        v.conclusive = true;
        v.interval = v.guaranteed = v.widest = interval;
        v.n = n;
        v.notes = std::move(condition) + "; prior work, not verified here";
        return v;
    };
    std::vector<DensityVerdict> rows;
    rows.push_back(row("p = 1", {1.0, 1.0, true, true}, "dense iff S is empty and h^(0) != 0"));
    rows.push_back(row("1 < p < 2n/(n+1)", {1.0, first, false, false}, "dense iff S is empty"));
    rows.push_back(row("2 <= p <= 2n/(n-1)", {2.0, second, true, n > 1}, "dense if S has measure zero in R+"));
    if (n > 1) rows.push_back(row("2n/(n-1) < p < inf", {second, kInfinity, false, false}, "dense iff S is nowhere dense"));
    return rows;
}

std::vector<DensityVerdict> build_verdicts(int n, std::optional<DimensionInput> beta, std::optional<DimensionInput> alpha) {
    std::vector<DensityVerdict> rows;
    if (beta) rows.push_back(radial_motion_verdict(*beta, n));
    if (alpha) {
        rows.push_back(translation_verdict(*alpha, n));
        rows.push_back(packing_verdict(*alpha, n));
    }
    for (auto& r : reference_verdicts(n)) rows.push_back(std::move(r));
    return rows;
}

std::string verdicts_to_json(const std::vector<DensityVerdict>& verdicts) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& v : verdicts) {
        nlohmann::json row{{"theorem", v.theorem},
                           {"formula", v.formula},
                           {"reference", v.reference},
                           {"conclusive", v.conclusive},
                           {"n", v.n},
                           {"notes", v.notes}};
        if (!v.reference)
            row["inputs"] = {{"dimension", v.dimension.estimate}, {"low", v.dimension.low}, {"high", v.dimension.high}};
        if (v.conclusive) row["p_interval"] = interval_json(v.interval);
        if (!v.reference) {
            row["guaranteed_conclusive"] = v.guaranteed_conclusive;
            if (v.guaranteed_conclusive) row["p_interval_guaranteed"] = interval_json(v.guaranteed);
            if (v.dimension.low < (v.theorem == "radial-motion-span" ? 1.0 : v.n))
                row["p_interval_widest"] = interval_json(v.widest);
        }
        rows.push_back(std::move(row));
    }
    return rows.dump(2);
}

}  // namespace fracspec::tauberian
