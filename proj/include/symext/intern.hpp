#pragma once

#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace symext {

// Insert-if-absent table with stable ids. Lookups by id do not lock.
template <class Key, class Record, class Hash>
class InternTable {
   public:
    static constexpr int kChunkBits = 12;
    static constexpr int kChunk = 1 << kChunkBits;
    static constexpr int kMaxChunks = 1 << 15;

    InternTable() {
        for (auto& c : chunks_) c.store(nullptr, std::memory_order_relaxed);
    }
    ~InternTable() {
        for (auto& c : chunks_) delete[] c.load(std::memory_order_relaxed);
    }
    InternTable(const InternTable&) = delete;
    InternTable& operator=(const InternTable&) = delete;

    template <class Make>
    int intern(const Key& key, Make&& make_record) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        int id = size_;
        if ((id >> kChunkBits) >= kMaxChunks) throw std::length_error("intern table full");
        auto& slot = chunks_[id >> kChunkBits];
        Record* chunk = slot.load(std::memory_order_relaxed);
        if (!chunk) {
            chunk = new Record[kChunk];
            slot.store(chunk, std::memory_order_release);
        }
        chunk[id & (kChunk - 1)] = make_record(key);
        index_.emplace(key, id);
        ++size_;
        return id;
    }

    int size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return size_;
    }

    const Record& get(int id) const {
        return chunks_[id >> kChunkBits].load(std::memory_order_acquire)[id & (kChunk - 1)];
    }

   private:
    mutable std::mutex mu_;
    std::unordered_map<Key, int, Hash> index_;
    std::array<std::atomic<Record*>, kMaxChunks> chunks_;
    int size_ = 0;
};

struct VecHash {
    template <class V>
    std::size_t operator()(const V& v) const {
        std::size_t h = v.size();
        for (const auto& x : v) h ^= std::hash<long long>{}(static_cast<long long>(hash_one(x))) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
    static long long hash_one(int x) { return x; }
    template <class A, class B>
    static long long hash_one(const std::pair<A, B>& p) {
        return (static_cast<long long>(p.first) << 32) ^ static_cast<long long>(p.second);
    }
};

}  // namespace symext
