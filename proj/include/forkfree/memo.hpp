#ifndef FORKFREE_MEMO_HPP
#define FORKFREE_MEMO_HPP

#include "forkfree/canonical.hpp"

#include <array>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace forkfree {

/// Results keyed by isomorphism class. Each shard has a single writer at a
/// time; values are functions of the key, so the order in which concurrent
/// workers fill the table does not affect what is read back.
template <typename Value>
class KeyedMemo {
public:
    std::optional<Value> find(const CanonicalKey& key) const
    {
        const auto& shard = shard_for(key);
        std::lock_guard lock(shard.mutex);
        if (auto it = shard.table.find(key); it != shard.table.end())
            return it->second;
        return std::nullopt;
    }

    void insert(const CanonicalKey& key, Value value)
    {
        auto& shard = shard_for(key);
        std::lock_guard lock(shard.mutex);
        shard.table.emplace(key, std::move(value));
    }

    std::size_t size() const
    {
        std::size_t total = 0;
        for (const auto& shard : shards_) {
            std::lock_guard lock(shard.mutex);
            total += shard.table.size();
        }
        return total;
    }

private:
    static constexpr std::size_t kShards = 16;

    struct Shard {
        mutable std::mutex mutex;
        std::unordered_map<CanonicalKey, Value> table;
    };

    Shard& shard_for(const CanonicalKey& key) { return shards_[std::hash<CanonicalKey>{}(key) % kShards]; }
    const Shard& shard_for(const CanonicalKey& key) const
    {
        return shards_[std::hash<CanonicalKey>{}(key) % kShards];
    }

    std::array<Shard, kShards> shards_;
};

}  // namespace forkfree

#endif
