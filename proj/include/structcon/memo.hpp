#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace structcon {

// Thread-safe memo table for immutable values. The producer runs outside the
// lock; if two threads race, the first stored value wins.
template <class Key, class Value>
class Memo {
public:
    std::shared_ptr<const Value> get(const Key& key, const std::function<Value()>& make) {
        {
            std::lock_guard lock(mu_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        auto value = std::make_shared<const Value>(make());
        std::lock_guard lock(mu_);
        return table_.emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Key, std::shared_ptr<const Value>> table_;
};

}  // namespace structcon
