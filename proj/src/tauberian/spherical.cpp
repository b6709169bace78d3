#include "fracspec/tauberian/spherical.hpp"

#include "fracspec/common/errors.hpp"
#include "fracspec/tauberian/span.hpp"

#include <algorithm>
#include <cmath>

namespace fracspec::tauberian {

SphericalZeroSet spherical_zero_radii(const GridFunction& f, std::optional<double> tol, double shell_width) {
    if (f.n != 2) throw DomainError("spherical zero radii need a planar grid");
    if (!(shell_width > 0.0)) throw DomainError("shell width must be positive");
    const auto z = dft_zero_set(f, tol);
    SphericalZeroSet out;
    out.shell_width = shell_width;
    out.tol = z.tol;
    out.frequency_spacing = 1.0 / (f.m * f.cell);

    const double limit = f.m / 2.0;
    const auto shells = static_cast<std::size_t>(std::floor((limit - 0.5 * shell_width) / shell_width));
    std::vector<double> shell_max(shells + 1, 0.0);
    std::vector<bool> occupied(shells + 1, false);
    for (int i = 0; i < f.m; ++i) {
        for (int j = 0; j < f.m; ++j) {
            const double r = std::hypot(centered(i, f.m), centered(j, f.m));
            // shell s covers [s w - w/2, s w + w/2)
            const auto s = static_cast<std::size_t>(std::floor(r / shell_width + 0.5));
            if (s == 0 || s > shells) continue;
            occupied[s] = true;
            shell_max[s] = std::max(shell_max[s], z.moduli[f.flat(i, j)]);
        }
    }
    for (std::size_t s = 1; s <= shells; ++s) {
        const double r = static_cast<double>(s) * shell_width;
        if (!occupied[s])
            out.gaps.push_back(r);
        else if (shell_max[s] < out.tol)
            out.radii.push_back(r);
    }
    return out;
}

}  // namespace fracspec::tauberian
