#include "ratseq/totient.hpp"

#include "ratseq/checked.hpp"

#include <stdexcept>

namespace ratseq {

std::int64_t totient(std::int64_t n) {
    if (n < 1) {
        throw std::domain_error("totient requires n >= 1");
    }
    std::int64_t result = n;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            result -= result / p;
            while (rest % p == 0) {
                rest /= p;
            }
        }
    }
    if (rest > 1) {
        result -= result / rest;
    }
    return result;
}

std::vector<std::int64_t> totient_sieve(std::int64_t n) {
    if (n < 1) {
        throw std::domain_error("totient sieve requires n >= 1");
    }
    std::vector<std::int64_t> phi(static_cast<std::size_t>(n) + 1);
    for (std::int64_t i = 0; i <= n; ++i) {
        phi[static_cast<std::size_t>(i)] = i;
    }
    for (std::int64_t p = 2; p <= n; ++p) {
        if (phi[static_cast<std::size_t>(p)] == p) {
            for (std::int64_t m = p; m <= n; m += p) {
                phi[static_cast<std::size_t>(m)] -= phi[static_cast<std::size_t>(m)] / p;
            }
        }
    }
    return phi;
}

std::int64_t farey_size(std::int64_t n) {
    const auto phi = totient_sieve(n);
    std::int64_t total = 1;
    for (std::int64_t j = 1; j <= n; ++j) {
        total = checked_add(total, phi[static_cast<std::size_t>(j)]);
    }
    return total;
}

} // namespace ratseq
