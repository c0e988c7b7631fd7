#include "posvote/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace posvote {

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: n out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty()) throw std::invalid_argument("Permutation: empty word");
    std::vector<bool> seen(word_.size(), false);
    for (int c : word_) {
        if (c < 1 || c > n() || seen[static_cast<std::size_t>(c - 1)]) {
            throw std::invalid_argument("Permutation: word is not a bijection on 1..n");
        }
        seen[static_cast<std::size_t>(c - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::from_cycle(int n, const std::vector<int>& cycle) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        int from = cycle[k];
        int to = cycle[(k + 1) % cycle.size()];
        if (from < 1 || from > n) throw std::invalid_argument("from_cycle: element out of range");
        w[static_cast<std::size_t>(from - 1)] = to;
    }
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (int place = 1; place <= n(); ++place) {
        w[static_cast<std::size_t>(at(place) - 1)] = place;
    }
    return Permutation(std::move(w));
}

int Permutation::place_of(int candidate) const {
    for (int place = 1; place <= n(); ++place) {
        if (at(place) == candidate) return place;
    }
    throw std::invalid_argument("place_of: candidate out of range");
}

std::uint64_t Permutation::rank() const {
    std::uint64_t r = 0;
    for (int k = 0; k < n(); ++k) {
        std::uint64_t smaller_remaining = 0;
        for (int j = k + 1; j < n(); ++j) {
            if (word_[static_cast<std::size_t>(j)] < word_[static_cast<std::size_t>(k)]) {
                ++smaller_remaining;
            }
        }
        r += smaller_remaining * factorial(n() - 1 - k);
    }
    return r + 1;
}

RatMatrix Permutation::matrix() const {
    RatMatrix m(static_cast<std::size_t>(n()), static_cast<std::size_t>(n()));
    for (int j = 1; j <= n(); ++j) {
        m.at(static_cast<std::size_t>(at(j) - 1), static_cast<std::size_t>(j - 1)) = 1;
    }
    return m;
}

Permutation perm_unrank(int n, std::uint64_t ell) {
    if (n < 1 || ell < 1 || ell > factorial(n)) {
        throw std::invalid_argument("perm_unrank: index out of range");
    }
    std::uint64_t r = ell - 1;
    std::vector<int> avail(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) avail[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        std::uint64_t f = factorial(k);
        std::size_t idx = static_cast<std::size_t>(r / f);
        r %= f;
        w.push_back(avail[idx]);
        avail.erase(avail.begin() + static_cast<long>(idx));
    }
    return Permutation(std::move(w));
}

RatVector permute_entries(const Permutation& sigma, const RatVector& v) {
    if (v.dim() != static_cast<std::size_t>(sigma.n())) {
        throw std::invalid_argument("permute_entries: dimension mismatch");
    }
    RatVector out(v.dim());
    for (int j = 1; j <= sigma.n(); ++j) {
        out[static_cast<std::size_t>(sigma.at(j) - 1)] = v[static_cast<std::size_t>(j - 1)];
    }
    return out;
}

}  // namespace posvote
