#pragma once

#include <cstddef>
#include <functional>

namespace lottery {

/// Number of worker threads used by parallel_for. Defaults to 1.
std::size_t thread_count() noexcept;

/// Sets the worker count; 0 selects std::thread::hardware_concurrency().
void set_thread_count(std::size_t n) noexcept;

/// Runs body(i) for i in [0, count). Work items must write to disjoint
/// locations; the first exception thrown by any item is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace lottery
