#ifndef EQCOLOR_PRODUCT_SPEC_HPP
#define EQCOLOR_PRODUCT_SPEC_HPP

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqcolor/partitions.hpp"

namespace eqcolor {

/// Parameters of K_{m_1,...,m_r} x K_n. The companion multipartite graph is
/// K_{m_1 n,...,m_r n}, whose part sizes are block_sizes().
class ProductSpec {
public:
    ProductSpec(std::vector<Int> parts, Int n) : parts_(std::move(parts)), n_(n) {
        if (parts_.empty()) throw std::domain_error("product spec needs at least one part");
        for (Int p : parts_) {
            if (p < 1) throw std::domain_error("part sizes must be positive");
        }
        if (n_ < 1) throw std::domain_error("n must be positive");
        m_ = std::accumulate(parts_.begin(), parts_.end(), Int{0});
    }

    const std::vector<Int>& parts() const { return parts_; }
    Int part(std::size_t i) const { return parts_.at(i); }
    Int n() const { return n_; }
    Int m() const { return m_; }
    std::size_t r() const { return parts_.size(); }
    Int vertex_count() const { return m_ * n_; }

    /// The closed forms are only claimed for sum(m_i) <= n.
    bool theorem_applicable() const { return m_ <= n_; }

    std::vector<Int> block_sizes() const {
        std::vector<Int> out;
        out.reserve(parts_.size());
        for (Int p : parts_) out.push_back(p * n_);
        return out;
    }

    /// First linear index of block i: n * (m_0 + ... + m_{i-1}).
    Int block_offset(std::size_t i) const {
        return n_ * std::accumulate(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(i), Int{0});
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "K_{";
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << "} x K_" << n_;
        return os.str();
    }

    friend bool operator==(const ProductSpec&, const ProductSpec&) = default;

private:
    std::vector<Int> parts_;
    Int n_;
    Int m_ = 0;
};

/// Parses a comma separated list of positive integers such as "1,2,2".
inline std::vector<Int> parse_int_list(std::string_view text) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item(text.substr(pos, comma - pos));
        if (item.empty()) throw std::invalid_argument("empty entry in list '" + std::string(text) + "'");
        std::size_t used = 0;
        Int value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

} // namespace eqcolor

#endif
