#pragma once

#include <cstddef>
#include <functional>

namespace settherm {

/// Worker count: set_thread_limit() if non-zero, else SET_THERMO_THREADS if
/// set, else std::thread::hardware_concurrency().
std::size_t thread_limit();
void set_thread_limit(std::size_t n);

/// Runs task(i) for i in [0, n_tasks) on up to thread_limit() threads. The
/// first exception thrown by any task is rethrown on the calling thread.
void parallel_for(std::size_t n_tasks, const std::function<void(std::size_t)>& task);

}  // namespace settherm
