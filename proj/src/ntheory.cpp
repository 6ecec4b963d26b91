#include "cayley/ntheory.hpp"

#include <numeric>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

void require_positive(std::int64_t k, const char* who) {
    if (k < 1)
        throw precondition_error(std::string(who) + ": argument must be >= 1");
}

} // namespace

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t k) {
    require_positive(k, "factorize");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= k; p += (p == 2 ? 1 : 2)) {
        if (k % p != 0)
            continue;
        int e = 0;
        while (k % p == 0) {
            k /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (k > 1)
        out.emplace_back(k, 1);
    return out;
}

std::int64_t euler_phi(std::int64_t k) {
    require_positive(k, "euler_phi");
    std::int64_t phi = k;
    for (const auto& [p, e] : factorize(k))
        phi -= phi / p;
    return phi;
}

int moebius(std::int64_t k) {
    require_positive(k, "moebius");
    int sign = 1;
    for (const auto& [p, e] : factorize(k)) {
        if (e > 1)
            return 0;
        sign = -sign;
    }
    return sign;
}

std::vector<std::int64_t> divisors(std::int64_t k) {
    require_positive(k, "divisors");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= k; ++d) {
        if (k % d != 0)
            continue;
        small.push_back(d);
        if (d != k / d)
            large.push_back(k / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::int64_t> units_mod(std::int64_t k) {
    require_positive(k, "units_mod");
    if (k == 1)
        return {0};
    std::vector<std::int64_t> units;
    for (std::int64_t a = 1; a < k; ++a)
        if (std::gcd(a, k) == 1)
            units.push_back(a);
    return units;
}

std::int64_t ramanujan_sum(std::int64_t q, std::int64_t a) {
    require_positive(q, "ramanujan_sum");
    a %= q;
    if (a < 0)
        a += q;
    const std::int64_t w = std::gcd(a, q); // gcd(0, q) = q
    const std::int64_t qw = q / w;
    const int mu = moebius(qw);
    if (mu == 0)
        return 0;
    return mu * (euler_phi(q) / euler_phi(qw));
}

} // namespace cayley
