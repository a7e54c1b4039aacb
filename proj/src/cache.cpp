#include "dp6/cache.hpp"

#include <fstream>
#include <mutex>
#include <stdexcept>

namespace dp6 {

std::optional<Int> MemoCache::get(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    hits_.fetch_add(1, std::memory_order_relaxed);
    return it->second;
}

void MemoCache::put(const std::string& key, const Int& value) {
    std::unique_lock lock(mu_);
    auto [it, inserted] = map_.emplace(key, value);
    if (!inserted && it->second != value)
        throw std::runtime_error("memo cache corruption: conflicting values for key " + key);
}

std::size_t MemoCache::size() const {
    std::shared_lock lock(mu_);
    return map_.size();
}

namespace {
std::string header_line(const std::string& engine, int offset) {
    return std::string("dp6cache v1 offset=") + (offset > 0 ? "+1" : "-1") +
           " engine=" + engine;
}
}  // namespace

void MemoCache::save(const std::filesystem::path& path) const {
    std::shared_lock lock(mu_);
    std::ofstream out(path, std::ios::binary);  // binary: byte-stable on every platform
    if (!out) throw std::runtime_error("cannot write cache file: " + path.string());
    out << header_line(engine_, offset_) << '\n';
    for (const auto& [k, v] : map_) out << k << '=' << v.str() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cache write failed: " + path.string());
}

void MemoCache::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read cache file: " + path.string());
    std::string header;
    if (!std::getline(in, header) || header != header_line(engine_, offset_))
        throw std::runtime_error("cache header mismatch in " + path.string() + ": got \"" +
                                 header + "\", want \"" + header_line(engine_, offset_) + "\"");
    std::unique_lock lock(mu_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        // Keys embed '='; the value (a plain decimal) never does.
        size_t eq = line.rfind('=');
        if (eq == std::string::npos)
            throw std::runtime_error("malformed cache record: " + line);
        std::string k = line.substr(0, eq);
        Int v(line.substr(eq + 1));
        auto it = map_.find(k);
        if (it == map_.end())
            map_.emplace(std::move(k), std::move(v));
        else if (it->second != v)
            throw std::runtime_error("memo cache corruption: conflicting values for key " + k);
    }
}

}  // namespace dp6
