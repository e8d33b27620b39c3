#pragma once

#include <span>
#include <vector>

namespace gograph {

// Ranks starting at 1, tied values share their average rank.
std::vector<double> average_ranks(std::span<const double> values);

// Spearman rank correlation (Pearson on average ranks). NaN when either
// side is constant or fewer than two samples are given.
double spearman(std::span<const double> x, std::span<const double> y);

}  // namespace gograph
