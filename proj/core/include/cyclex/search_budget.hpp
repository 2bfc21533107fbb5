#pragma once

#include <atomic>
#include <cstdint>

#include "cyclex/error.hpp"

namespace cyclex {

/// Limits shared by every exponential search.  max_nodes == 0 means
/// unlimited.  The cancel flag is polled cooperatively.
struct SearchBudget {
    std::uint64_t max_nodes = 0;
    const std::atomic<bool>* cancel = nullptr;
};

/// Per-search node counter.  Throws BudgetExhausted / Cancelled.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& budget) : budget_(budget) {}

    void tick() {
        ++nodes_;
        if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) {
            throw Error(ErrorCode::BudgetExhausted, "node budget exhausted");
        }
        if (budget_.cancel != nullptr && (nodes_ & 0x3ff) == 0 &&
            budget_.cancel->load(std::memory_order_relaxed)) {
            throw Error(ErrorCode::Cancelled, "search cancelled");
        }
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    SearchBudget budget_;
    std::uint64_t nodes_ = 0;
};

}  // namespace cyclex
