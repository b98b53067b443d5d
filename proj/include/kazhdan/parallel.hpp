#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace kazhdan {

// Runs independent tasks on up to `jobs` threads. Each task writes only to
// its own result slot; the caller reads the slots after this returns. The
// first exception thrown by a task is rethrown here.
void run_parallel(const std::vector<std::function<void()>>& tasks, std::size_t jobs);

}  // namespace kazhdan
