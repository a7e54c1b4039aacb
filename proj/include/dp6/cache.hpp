#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "dp6/arith.hpp"

namespace dp6 {

// Concurrent memo store for canonical quadruple keys, partitioned by engine
// and genus-offset so configuration experiments can never mix values.
class MemoCache {
public:
    MemoCache(std::string engine, int genus_offset)
        : engine_(std::move(engine)), offset_(genus_offset) {}

    std::optional<Int> get(const std::string& key) const;
    // Idempotent; a second put with a different value is a corruption error.
    void put(const std::string& key, const Int& value);

    // Line-oriented text: "dp6cache v1 offset=<-1|+1> engine=<tag>" then
    // "key=value" sorted by key.  load() rejects any header mismatch.
    void save(const std::filesystem::path& path) const;
    void load(const std::filesystem::path& path);

    std::size_t size() const;
    std::uint64_t hits() const { return hits_.load(); }
    const std::string& engine() const { return engine_; }
    int genus_offset() const { return offset_; }

private:
    std::string engine_;
    int offset_;
    std::map<std::string, Int> map_;
    mutable std::shared_mutex mu_;
    mutable std::atomic<std::uint64_t> hits_{0};
};

}  // namespace dp6
