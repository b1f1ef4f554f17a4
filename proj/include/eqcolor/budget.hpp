#ifndef EQCOLOR_BUDGET_HPP
#define EQCOLOR_BUDGET_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace eqcolor {

inline constexpr std::uint64_t default_search_budget = 10'000'000;

/// Thrown when an exhaustive search runs out of nodes. Never means infeasible.
class search_budget_exceeded : public std::runtime_error {
public:
    explicit search_budget_exceeded(std::uint64_t budget)
        : std::runtime_error("search budget of " + std::to_string(budget) + " nodes exceeded"), budget_(budget) {}
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

/// Node counter shared by the backtracking searches.
class NodeBudget {
public:
    explicit NodeBudget(std::uint64_t limit = default_search_budget) : limit_(limit) {}

    void tick() {
        if (++used_ > limit_) throw search_budget_exceeded(limit_);
    }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

/// EQCOLOR_BUDGET from the environment, or the default.
inline std::uint64_t budget_from_environment() {
    const char* raw = std::getenv("EQCOLOR_BUDGET");
    if (raw == nullptr || *raw == '\0') return default_search_budget;
    try {
        std::size_t used = 0;
        const unsigned long long value = std::stoull(raw, &used);
        if (used == std::string(raw).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("EQCOLOR_BUDGET is not a positive integer: ") + raw);
}

} // namespace eqcolor

#endif
