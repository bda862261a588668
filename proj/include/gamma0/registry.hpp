#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

#include "gamma0/generators.hpp"

namespace gamma0 {

/// Source of generator sets keyed by level.
class GeneratorProvider {
 public:
  virtual ~GeneratorProvider() = default;
  virtual std::shared_ptr<const GeneratorSet> get(std::int64_t level) = 0;
};

/// Builds each level once and keeps it in memory. Thread-safe.
class MemoryGeneratorCache : public GeneratorProvider {
 public:
  explicit MemoryGeneratorCache(SubdivisionOrder order = SubdivisionOrder::SmallestMediant) : order_(order) {}

  std::shared_ptr<const GeneratorSet> get(std::int64_t level) override {
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(level); it != memo_.end()) return it->second;
    }
    auto built = load_or_build(level);
    std::lock_guard lock(mu_);
    return memo_.emplace(level, std::move(built)).first->second;
  }

 protected:
  virtual std::shared_ptr<const GeneratorSet> load_or_build(std::int64_t level) {
    return std::make_shared<const GeneratorSet>(generators(level, order_));
  }

  SubdivisionOrder order() const { return order_; }

 private:
  SubdivisionOrder order_;
  std::mutex mu_;
  std::map<std::int64_t, std::shared_ptr<const GeneratorSet>> memo_;
};

}  // namespace gamma0
