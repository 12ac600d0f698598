#pragma once

#include <cstddef>
#include <functional>

namespace qweight {

/// Worker cap for the parallel loops. Zero restores the hardware default.
void set_max_threads(unsigned threads);
unsigned max_threads();

/// Calls body(i) for every i in [0, count), splitting the range into
/// contiguous blocks across worker threads. body must only write state owned
/// by index i; the first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qweight
