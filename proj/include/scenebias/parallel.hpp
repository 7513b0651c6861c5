#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace scenebias {

/// 0 means one worker per hardware thread.
int resolve_jobs(int jobs);

/// Runs fn(i) for every i in [0, count) on up to `jobs` worker threads.
/// Exceptions are captured per item; slot i holds the message if item i threw.
std::vector<std::optional<std::string>> parallel_for(std::size_t count, int jobs,
                                                     const std::function<void(std::size_t)>& fn);

}  // namespace scenebias
