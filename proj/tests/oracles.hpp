#pragma once

// Brute-force reference computations used by the unit and acceptance suites. Nothing here
// calls into the implementation paths it is compared against.

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fqlab/gf.hpp"

namespace fqlab::oracle {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(std::uint64_t m, std::uint64_t n) {
    if (n > m) return 0;
    BigInt num = 1, den = 1;
    for (std::uint64_t j = 0; j < n; ++j) {
        num *= m - j;
        den *= j + 1;
    }
    return num / den;
}

inline std::uint32_t binomial_mod(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
    return static_cast<std::uint32_t>(binomial(m, n) % p);
}

inline std::uint64_t star(std::uint64_t a, std::uint64_t q) {
    if (a == 0) return 0;
    std::uint64_t r = a;
    while (r > q - 1) r -= q - 1;
    return r;
}

/// Remainder of a (low-degree first) by a monic b over Z_p.
inline std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& b, std::uint32_t p) {
    while (a.size() >= b.size()) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

/// Irreducible iff no monic polynomial of degree 1..deg/2 divides it.
inline bool irreducible_by_trial_division(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t n = 0; n < count; ++n) {
            std::vector<std::uint32_t> g(d + 1, 0);
            g[d] = 1;
            std::uint64_t v = n;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

/// First monic irreducible of degree e, comparing c_0 first, then c_1, ...
inline std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t e) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
        std::vector<std::uint32_t> f(e + 1, 0);
        f[e] = 1;
        std::uint64_t v = n;
        for (std::uint32_t i = e; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (irreducible_by_trial_division(f, p)) return f;
    }
    return {};
}

/// Materialised adjacency of G_q(X^a Y^b, X^c Y^d), built straight from the defining
/// equations with field.pow and field.mul, then BFS from every vertex.
inline std::optional<std::uint32_t> girth_all_sources(const Field& field, std::uint64_t a,
                                                      std::uint64_t b, std::uint64_t c,
                                                      std::uint64_t d) {
    const std::uint32_t q = field.q();
    const std::uint32_t n3 = q * q * q;
    std::vector<std::vector<std::uint32_t>> adj(2 * n3);
    for (std::uint32_t p1 = 0; p1 < q; ++p1) {
        for (std::uint32_t l1 = 0; l1 < q; ++l1) {
            const Element f = field.mul(field.pow(Element{p1}, a), field.pow(Element{l1}, b));
            const Element g = field.mul(field.pow(Element{p1}, c), field.pow(Element{l1}, d));
            for (std::uint32_t p2 = 0; p2 < q; ++p2) {
                for (std::uint32_t p3 = 0; p3 < q; ++p3) {
                    const Element l2 = field.sub(f, Element{p2});
                    const Element l3 = field.sub(g, Element{p3});
                    const std::uint32_t point = p1 * q * q + p2 * q + p3;
                    const std::uint32_t line = n3 + l1 * q * q + l2.index * q + l3.index;
                    adj[point].push_back(line);
                    adj[line].push_back(point);
                }
            }
        }
    }
    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t best = kInf;
    std::vector<std::uint32_t> dist(adj.size()), parent(adj.size());
    for (std::uint32_t s = 0; s < adj.size(); ++s) {
        std::fill(dist.begin(), dist.end(), kInf);
        std::deque<std::uint32_t> queue{s};
        dist[s] = 0;
        parent[s] = s;
        while (!queue.empty()) {
            const std::uint32_t u = queue.front();
            queue.pop_front();
            for (std::uint32_t w : adj[u]) {
                if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == kInf) return std::nullopt;
    return best;
}

}  // namespace fqlab::oracle
