#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace fubini {

/// Index -> value cache where each value is built exactly once. map nodes
/// are stable, so returned references survive later insertions. A builder
/// must not re-enter the same table.
template <typename T>
class MemoTable {
public:
    template <typename Builder>
    const T& get(unsigned n, Builder&& build) const {
        {
            std::shared_lock lock(mutex_);
            if (auto it = values_.find(n); it != values_.end()) return it->second;
        }
        std::unique_lock lock(mutex_);
        if (auto it = values_.find(n); it != values_.end()) return it->second;
        return values_.emplace(n, build(n)).first->second;
    }

private:
    mutable std::shared_mutex mutex_;
    mutable std::map<unsigned, T> values_;
};

}  // namespace fubini
