#include "fqlab/graphs.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "fqlab/digits.hpp"
#include "fqlab/error.hpp"
#include "fqlab/parallel.hpp"
#include "fqlab/pp.hpp"

namespace fqlab {

namespace {

constexpr std::uint32_t kNoCycle = std::numeric_limits<std::uint32_t>::max();

/// Shortest cycle through `source` if shorter than `limit`, else kNoCycle. Expansion stops
/// once 2 * depth reaches the best length seen, which is the earliest depth at which a
/// shorter closed walk could still be found.
std::uint32_t shortest_cycle_from(const MonomialGraph& graph, MonomialGraph::VertexId source,
                                  std::uint32_t limit) {
    const auto n = static_cast<std::size_t>(graph.vertex_count());
    constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> depth(n, kUnseen);
    std::vector<MonomialGraph::VertexId> parent(n, 0);
    std::vector<MonomialGraph::VertexId> queue;
    queue.reserve(n);
    queue.push_back(source);
    depth[source] = 0;
    parent[source] = source;
    std::uint32_t best = limit;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto u = queue[head];
        if (2 * depth[u] >= best) break;
        graph.for_each_neighbor(u, [&](MonomialGraph::VertexId w) {
            if (depth[w] == kUnseen) {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if (w != parent[u]) {
                best = std::min(best, depth[u] + depth[w] + 1);
            }
        });
    }
    return best < limit ? best : kNoCycle;
}

std::uint32_t shortest_cycle(const MonomialGraph& graph, std::uint32_t limit,
                             const GirthOptions& options) {
    if (graph.q() > options.cap) {
        throw Error(ErrorKind::CapExceeded, "q = " + std::to_string(graph.q()) +
                                                " exceeds girth cap " + std::to_string(options.cap));
    }
    const std::uint32_t q = graph.q();
    std::vector<std::uint32_t> per_source(q, kNoCycle);
    parallel_for(q, options.jobs, [&](std::size_t c) {
        const auto source = graph.vertex_id(
            Side::P, Triple{Element{static_cast<std::uint32_t>(c)}, Element{0}, Element{0}});
        per_source[c] = shortest_cycle_from(graph, source, limit);
    });
    return *std::min_element(per_source.begin(), per_source.end());
}

}  // namespace

MonomialGraph::MonomialGraph(Field field, Monomial f, Monomial g)
    : field_(std::move(field)), f_(f), g_(g), q_(field_.q()) {
    if (q_ > kGraphTableCap) {
        throw Error(ErrorKind::CapExceeded,
                    "monomial graph tables need q <= " + std::to_string(kGraphTableCap));
    }
    const std::size_t cells = std::size_t{q_} * q_;
    f_table_.resize(cells);
    g_table_.resize(cells);
    sub_.resize(cells);
    std::vector<std::uint32_t> xf(q_), yf(q_), xg(q_), yg(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        const Element x{a};
        xf[a] = field_.pow(x, f.x_exp).index;
        yf[a] = field_.pow(x, f.y_exp).index;
        xg[a] = field_.pow(x, g.x_exp).index;
        yg[a] = field_.pow(x, g.y_exp).index;
    }
    for (std::uint32_t a = 0; a < q_; ++a) {
        for (std::uint32_t b = 0; b < q_; ++b) {
            const std::size_t cell = std::size_t{a} * q_ + b;
            f_table_[cell] = field_.mul(Element{xf[a]}, Element{yf[b]}).index;
            g_table_[cell] = field_.mul(Element{xg[a]}, Element{yg[b]}).index;
            sub_[cell] = field_.sub(Element{a}, Element{b}).index;
        }
    }
}

MonomialGraph MonomialGraph::for_exponent(Field field, std::uint64_t k) {
    return MonomialGraph(std::move(field), Monomial{1, 1}, Monomial{k, 2 * k});
}

MonomialGraph::VertexId MonomialGraph::vertex_id(Side side, const Triple& v) const noexcept {
    const VertexId local = v.first.index * q_ * q_ + v.second.index * q_ + v.third.index;
    return side == Side::P ? local : static_cast<VertexId>(cube()) + local;
}

std::pair<Side, Triple> MonomialGraph::vertex_at(VertexId id) const noexcept {
    const bool is_line = id >= cube();
    const auto local = is_line ? static_cast<std::uint32_t>(id - cube()) : id;
    return {is_line ? Side::L : Side::P,
            Triple{Element{local / (q_ * q_)}, Element{local / q_ % q_}, Element{local % q_}}};
}

std::vector<Triple> MonomialGraph::neighbors(Side side, const Triple& vertex) const {
    std::vector<Triple> out;
    out.reserve(q_);
    for_each_neighbor(vertex_id(side, vertex),
                      [&](VertexId w) { out.push_back(vertex_at(w).second); });
    return out;
}

std::optional<std::uint32_t> girth(const MonomialGraph& graph, const GirthOptions& options) {
    const std::uint32_t g = shortest_cycle(graph, kNoCycle, options);
    if (g == kNoCycle) return std::nullopt;
    return g;
}

bool girth_at_least(const MonomialGraph& graph, std::uint32_t bound, const GirthOptions& options) {
    if (bound != 4 && bound != 6 && bound != 8) {
        throw Error(ErrorKind::ParamDomain, "girth bound must be 4, 6 or 8");
    }
    return shortest_cycle(graph, bound, options) == kNoCycle;
}

Conjecture1Report conjecture1_scan(const Field& field, const GirthOptions& options) {
    if (field.q() > options.cap) {
        throw Error(ErrorKind::CapExceeded, "q = " + std::to_string(field.q()) +
                                                " exceeds girth cap " + std::to_string(options.cap));
    }
    Conjecture1Report report;
    report.q = field.q();
    report.rows.resize(field.q() - 1);
    // Parallelism goes to the k loop; each girth test runs single-threaded.
    GirthOptions inner = options;
    inner.jobs = 1;
    parallel_for(report.rows.size(), options.jobs, [&](std::size_t i) {
        auto& row = report.rows[i];
        row.k = i + 1;
        row.girth_ge_8 = girth_at_least(MonomialGraph::for_exponent(field, row.k), 8, inner);
        row.a_pp = is_pp(field, Family::A, row.k);
        row.b_pp = is_pp(field, Family::B, row.k);
        row.p_power = is_p_power(row.k, field);
    });
    report.implication_holds = true;
    for (const auto& row : report.rows) {
        if (row.girth_ge_8) report.passing.push_back(row.k);
        if (row.p_power) report.p_powers.push_back(row.k);
        if (row.girth_ge_8 && !(row.a_pp && row.b_pp)) report.implication_holds = false;
    }
    report.set_matches = report.passing == report.p_powers;
    return report;
}

}  // namespace fqlab
