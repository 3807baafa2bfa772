#pragma once

#include <optional>
#include <vector>

#include "lendens/rational.hpp"

namespace lendens::detail {

/// Some w with rows * w == 0 and every w_i >= 1, or nullopt if none exists.
/// Exact phase-1 simplex with Bland's rule.
std::optional<std::vector<Rational>> positive_kernel_point(
    const std::vector<std::vector<Rational>>& rows, std::size_t columns);

}  // namespace lendens::detail
