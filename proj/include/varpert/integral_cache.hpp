#pragma once

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include <nlohmann/json.hpp>

#include "varpert/helium.hpp"

namespace varpert {

/// Persistent JSON memo for helium radial integrals.
///
/// File layout:
///   { "format": "varpert-integral-cache", "version": 1,
///     "entries": { "<kind>|<n>|<n'>|<l>|<z_star %.12g>": value, ... } }
///
/// The file is read on first lookup. A missing file starts empty; an unreadable,
/// malformed or version-mismatched file is discarded with a warning on `diag`
/// and rebuilt on the next `save()`.
class IntegralCache final : public helium::IntegralStore {
public:
    static constexpr int version = 1;
    static constexpr const char* format_tag = "varpert-integral-cache";

    explicit IntegralCache(std::filesystem::path path, std::ostream& diag = std::cerr)
        : path_(std::move(path)), diag_(&diag) {}

    static std::string key_string(const helium::IntegralKey& k) {
        char z[64];
        std::snprintf(z, sizeof z, "%.12g", k.z_star);
        return std::string(1, k.kind) + "|" + std::to_string(k.n) + "|" + std::to_string(k.n_prime) + "|" +
               std::to_string(k.l) + "|" + z;
    }

    std::optional<double> find(const helium::IntegralKey& key) const override {
        ensure_loaded();
        std::shared_lock lock(mutex_);
        const auto it = entries_.find(key_string(key));
        if (it == entries_.end()) {
            misses_.fetch_add(1, std::memory_order_relaxed);
            return std::nullopt;
        }
        hits_.fetch_add(1, std::memory_order_relaxed);
        return it->second;
    }

    void store(const helium::IntegralKey& key, double value) override {
        ensure_loaded();
        std::unique_lock lock(mutex_);
        entries_[key_string(key)] = value;
        dirty_ = true;
    }

    /// Writes the cache if anything was added since loading.
    void save() const {
        ensure_loaded();
        std::shared_lock lock(mutex_);
        if (!dirty_) return;
        nlohmann::json j;
        j["format"] = format_tag;
        j["version"] = version;
        j["entries"] = nlohmann::json::object();
        for (const auto& [k, v] : entries_) j["entries"][k] = v;
        std::ofstream out(path_);
        if (!out) {
            *diag_ << "warning: cannot write integral cache " << path_.string() << "\n";
            return;
        }
        out << j.dump(1) << "\n";
    }

    std::size_t hits() const noexcept { return hits_.load(); }
    std::size_t misses() const noexcept { return misses_.load(); }
    std::size_t size() const {
        ensure_loaded();
        std::shared_lock lock(mutex_);
        return entries_.size();
    }

private:
    void ensure_loaded() const {
        {
            std::shared_lock lock(mutex_);
            if (loaded_) return;
        }
        std::unique_lock lock(mutex_);
        if (loaded_) return;
        loaded_ = true;
        if (!std::filesystem::exists(path_)) return;

        auto discard = [&](const std::string& why) {
            *diag_ << "warning: integral cache " << path_.string() << " " << why << "; rebuilding\n";
            entries_.clear();
            dirty_ = true;
        };
        try {
            std::ifstream in(path_);
            const auto j = nlohmann::json::parse(in);
            if (!j.is_object() || j.value("format", std::string{}) != format_tag)
                return discard("has an unrecognized format");
            if (j.value("version", -1) != version) return discard("has a different version");
            for (const auto& [k, v] : j.at("entries").items()) entries_[k] = v.get<double>();
        } catch (const std::exception& e) {
            discard(std::string("is corrupt (") + e.what() + ")");
        }
    }

    std::filesystem::path path_;
    std::ostream* diag_;
    mutable std::shared_mutex mutex_;
    mutable bool loaded_ = false;
    mutable bool dirty_ = false;
    mutable std::map<std::string, double> entries_;
    mutable std::atomic<std::size_t> hits_{0};
    mutable std::atomic<std::size_t> misses_{0};
};

} // namespace varpert
