#include "monolab/config.hpp"

#include "monolab/errors.hpp"

#include <atomic>

namespace monolab {

namespace {
std::atomic<std::size_t> g_element_cap{kDefaultElementCap};
}

std::size_t element_cap() noexcept { return g_element_cap.load(std::memory_order_relaxed); }

void set_element_cap(std::size_t cap) {
    if (cap < 4) throw validation_error("element cap must be at least 4");
    g_element_cap.store(cap, std::memory_order_relaxed);
}

} // namespace monolab
