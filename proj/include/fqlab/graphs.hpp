#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fqlab/gf.hpp"

namespace fqlab {

inline constexpr std::uint32_t kDefaultGirthCap = 17;
/// Largest q for which the q x q monomial and subtraction tables are built.
inline constexpr std::uint32_t kGraphTableCap = 1024;

/// X^x_exp Y^y_exp, evaluated with 0^0 = 1.
struct Monomial {
    std::uint64_t x_exp = 0;
    std::uint64_t y_exp = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class Side { P, L };

struct Triple {
    Element first;
    Element second;
    Element third;

    friend bool operator==(const Triple&, const Triple&) = default;
};

struct GirthOptions {
    std::uint32_t cap = kDefaultGirthCap;
    unsigned jobs = 1;
};

/// Bipartite graph on two copies of F_q^3: point (p1, p2, p3) meets line [l1, l2, l3] iff
/// p2 + l2 = f(p1, l1) and p3 + l3 = g(p1, l1). Adjacency is evaluated on demand.
class MonomialGraph {
public:
    using VertexId = std::uint32_t;

    MonomialGraph(Field field, Monomial f, Monomial g);

    /// G_q(XY, X^k Y^{2k}).
    static MonomialGraph for_exponent(Field field, std::uint64_t k);

    const Field& field() const noexcept { return field_; }
    Monomial f() const noexcept { return f_; }
    Monomial g() const noexcept { return g_; }
    std::uint32_t q() const noexcept { return q_; }
    std::uint64_t vertex_count() const noexcept { return 2 * cube(); }
    std::uint64_t edge_count() const noexcept { return cube() * q_; }

    /// Opposite-side neighbours, ordered by the free coordinate's enumeration index.
    std::vector<Triple> neighbors(Side side, const Triple& vertex) const;

    /// Points occupy [0, q^3), lines [q^3, 2q^3); each as c1 q^2 + c2 q + c3.
    VertexId vertex_id(Side side, const Triple& vertex) const noexcept;
    std::pair<Side, Triple> vertex_at(VertexId id) const noexcept;

    template <typename Fn>
    void for_each_neighbor(VertexId id, Fn&& fn) const {
        const std::uint64_t n3 = cube();
        const bool is_line = id >= n3;
        const std::uint32_t local = is_line ? static_cast<std::uint32_t>(id - n3) : id;
        const std::uint32_t fixed = local / (q_ * q_);
        const std::uint32_t c2 = local / q_ % q_;
        const std::uint32_t c3 = local % q_;
        const VertexId offset = is_line ? 0 : static_cast<VertexId>(n3);
        for (std::uint32_t free = 0; free < q_; ++free) {
            // Lines fix l1 and range over p1; points fix p1 and range over l1.
            const std::size_t cell = is_line ? std::size_t{free} * q_ + fixed
                                             : std::size_t{fixed} * q_ + free;
            const std::uint32_t n2 = sub_[std::size_t{f_table_[cell]} * q_ + c2];
            const std::uint32_t n3c = sub_[std::size_t{g_table_[cell]} * q_ + c3];
            fn(offset + free * q_ * q_ + n2 * q_ + n3c);
        }
    }

private:
    std::uint64_t cube() const noexcept { return std::uint64_t{q_} * q_ * q_; }

    Field field_;
    Monomial f_;
    Monomial g_;
    std::uint32_t q_;
    std::vector<std::uint32_t> f_table_;  // f(p1, l1) at p1 * q + l1
    std::vector<std::uint32_t> g_table_;
    std::vector<std::uint32_t> sub_;  // a - b at a * q + b
};

/// Shortest cycle length, or nullopt for an acyclic graph. BFS runs only from the points
/// (c, 0, 0): translations of the second and third coordinates act transitively on each
/// slice {p1 = c}, and every cycle passes through a point.
std::optional<std::uint32_t> girth(const MonomialGraph& graph, const GirthOptions& options = {});

/// True iff the graph has no cycle shorter than `bound` (one of 4, 6, 8).
bool girth_at_least(const MonomialGraph& graph, std::uint32_t bound,
                    const GirthOptions& options = {});

struct Conjecture1Row {
    std::uint64_t k = 0;
    bool girth_ge_8 = false;
    bool a_pp = false;
    bool b_pp = false;
    bool p_power = false;
};

struct Conjecture1Report {
    std::uint32_t q = 0;
    std::vector<Conjecture1Row> rows;
    std::vector<std::uint64_t> passing;   // k with girth >= 8
    std::vector<std::uint64_t> p_powers;
    bool set_matches = false;             // passing == p_powers
    bool implication_holds = false;       // girth >= 8 implies both A_k and B_k are PPs
    bool pass() const noexcept { return set_matches && implication_holds; }
};

Conjecture1Report conjecture1_scan(const Field& field, const GirthOptions& options = {});

}  // namespace fqlab
