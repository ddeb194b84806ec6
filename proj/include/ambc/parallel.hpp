#pragma once

#include <cstddef>
#include <functional>

namespace ambc {

// Runs body(i) for i in [0, n) over `workers` threads using contiguous static
// chunks. If several indices throw, the exception of the lowest index is
// rethrown after all workers finish.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& body);

// Hardware concurrency, at least 1.
std::size_t default_workers();

}  // namespace ambc
