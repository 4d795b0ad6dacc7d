#pragma once
#include <atomic>

#include "leibcoh/errors.hpp"

namespace leibcoh {

// Cooperative cancellation. Long-running kernels poll the token between
// independent work items, so cancelling never leaves a result half-built.
class CancelToken {
  public:
    void cancel() { flag_.store(true, std::memory_order_relaxed); }
    bool cancelled() const { return flag_.load(std::memory_order_relaxed); }

  private:
    std::atomic<bool> flag_{false};
};

// Execution options threaded through the heavy entry points.
struct Context {
    bool parallel = true;
    const CancelToken* cancel = nullptr;

    void poll() const {
        if (cancel && cancel->cancelled()) throw CancelledError();
    }
};

} // namespace leibcoh
