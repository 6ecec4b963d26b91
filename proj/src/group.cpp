#include "cayley/group.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace cayley {

namespace {

// Factors above this make character-exponent arithmetic overflow-prone.
constexpr std::int64_t kMaxFactor = std::int64_t{1} << 31;
constexpr std::int64_t kMaxOrder = std::int64_t{1} << 62;

std::int64_t reduce(std::int64_t v, std::int64_t n) {
    v %= n;
    return v < 0 ? v + n : v;
}

std::int64_t parse_int(std::string_view token, const char* what) {
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw precondition_error(std::string("could not parse ") + what + ": '" +
                                 std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

AbelianGroup::AbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    if (factors_.empty())
        throw invalid_group_error("group needs at least one cyclic factor");
    order_ = 1;
    exponent_ = 1;
    for (const std::int64_t n : factors_) {
        if (n < 2)
            throw invalid_group_error("every factor must be >= 2, got " + std::to_string(n));
        if (n > kMaxFactor)
            throw invalid_group_error("factor " + std::to_string(n) + " exceeds the 64-bit bound");
        if (order_ > kMaxOrder / n)
            throw invalid_group_error("group order exceeds the 64-bit bound");
        order_ *= n;
        exponent_ = std::lcm(exponent_, n);
    }
}

GroupElement AbelianGroup::zero() const {
    return GroupElement{std::vector<std::int64_t>(rank(), 0)};
}

GroupElement AbelianGroup::element_at(std::int64_t index) const {
    if (index < 0 || index >= order_)
        throw precondition_error("element index " + std::to_string(index) + " out of range");
    std::vector<std::int64_t> coords(rank());
    for (std::size_t i = rank(); i-- > 0;) {
        coords[i] = index % factors_[i];
        index /= factors_[i];
    }
    return GroupElement{std::move(coords)};
}

std::int64_t AbelianGroup::index_of(const GroupElement& x) const {
    if (x.coords.size() != rank())
        throw precondition_error("element has wrong coordinate count for this group");
    std::int64_t index = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        const std::int64_t c = x.coords[i];
        if (c < 0 || c >= factors_[i])
            throw precondition_error("coordinate " + std::to_string(c) + " not reduced");
        index = index * factors_[i] + c;
    }
    return index;
}

AbelianGroup parse_group(std::string_view spec) {
    std::vector<std::int64_t> factors;
    for (const auto token : split(spec, ','))
        factors.push_back(parse_int(token, "group factor"));
    return AbelianGroup(std::move(factors));
}

GroupElement make_element(const AbelianGroup& g, std::vector<std::int64_t> raw) {
    if (raw.size() != g.rank())
        throw precondition_error("element has wrong coordinate count for this group");
    for (std::size_t i = 0; i < raw.size(); ++i)
        raw[i] = reduce(raw[i], g.factors()[i]);
    return GroupElement{std::move(raw)};
}

bool is_zero(const GroupElement& x) {
    for (const std::int64_t c : x.coords)
        if (c != 0)
            return false;
    return true;
}

GroupElement add(const AbelianGroup& g, const GroupElement& x, const GroupElement& y) {
    if (x.coords.size() != g.rank() || y.coords.size() != g.rank())
        throw precondition_error("element has wrong coordinate count for this group");
    std::vector<std::int64_t> coords(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
        coords[i] = reduce(x.coords[i] + y.coords[i], g.factors()[i]);
    return GroupElement{std::move(coords)};
}

GroupElement neg(const AbelianGroup& g, const GroupElement& x) {
    if (x.coords.size() != g.rank())
        throw precondition_error("element has wrong coordinate count for this group");
    std::vector<std::int64_t> coords(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
        coords[i] = reduce(-x.coords[i], g.factors()[i]);
    return GroupElement{std::move(coords)};
}

GroupElement scalar_mul(const AbelianGroup& g, std::int64_t k, const GroupElement& x) {
    if (x.coords.size() != g.rank())
        throw precondition_error("element has wrong coordinate count for this group");
    std::vector<std::int64_t> coords(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const std::int64_t n = g.factors()[i];
        coords[i] = reduce((k % n) * x.coords[i], n);
    }
    return GroupElement{std::move(coords)};
}

std::int64_t element_order(const AbelianGroup& g, const GroupElement& x) {
    if (x.coords.size() != g.rank())
        throw precondition_error("element has wrong coordinate count for this group");
    std::int64_t order = 1;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const std::int64_t n = g.factors()[i];
        order = std::lcm(order, n / std::gcd(x.coords[i], n));
    }
    return order;
}

std::string to_string(const AbelianGroup& g) {
    std::ostringstream out;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (i > 0)
            out << ',';
        out << g.factors()[i];
    }
    return out.str();
}

std::string to_string(const GroupElement& x) {
    std::ostringstream out;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (i > 0)
            out << ':';
        out << x.coords[i];
    }
    return out.str();
}

GroupElement parse_element(const AbelianGroup& g, std::string_view text) {
    std::vector<std::int64_t> raw;
    for (const auto token : split(text, ':'))
        raw.push_back(parse_int(token, "element coordinate"));
    return make_element(g, std::move(raw));
}

} // namespace cayley
