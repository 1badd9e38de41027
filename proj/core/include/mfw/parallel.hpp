#pragma once

#include <cstddef>
#include <functional>

namespace mfw {

/// Runs fn(0), ..., fn(count-1), on up to `jobs` threads when jobs > 1.
/// Callers index results by i, so scheduling never affects output.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

} // namespace mfw
