#include "fqlab/pp.hpp"

#include <algorithm>
#include <numeric>

#include "fqlab/digits.hpp"
#include "fqlab/error.hpp"
#include "fqlab/parallel.hpp"

namespace fqlab {

namespace {

void require_exponent(const Field& field, std::uint64_t k) {
    if (k < 1 || k > field.q() - 1) {
        throw Error(ErrorKind::ParamDomain, "k must lie in 1..q-1, got " + std::to_string(k));
    }
}

}  // namespace

std::string_view to_string(Family family) noexcept {
    switch (family) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::Both: return "two";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view text) noexcept {
    if (text == "A" || text == "a") return Family::A;
    if (text == "B" || text == "b") return Family::B;
    if (text == "two" || text == "2" || text == "both") return Family::Both;
    return std::nullopt;
}

Element eval_A(const Field& field, std::uint64_t k, Element x) {
    require_exponent(field, k);
    const Element xk = field.pow(x, k);
    return field.mul(xk, field.sub(field.pow(field.add_one(x), k), xk));
}

Element eval_B(const Field& field, std::uint64_t k, Element x) {
    require_exponent(field, k);
    const std::uint64_t q = field.q();
    const Element shifted = field.sub(field.pow(field.add_one(x), 2 * k), field.one());
    const Element left = field.mul(shifted, field.pow(x, q - 1 - k));
    const Element right = field.mul(field.from_integer(2), field.pow(x, q - 1));
    return field.sub(left, right);
}

std::vector<Element> value_table(const Field& field, Family family, std::uint64_t k) {
    if (family == Family::Both) {
        throw Error(ErrorKind::ParamDomain, "value tables exist for A or B only");
    }
    std::vector<Element> out(field.q());
    for (std::uint32_t i = 0; i < field.q(); ++i) {
        out[i] = family == Family::A ? eval_A(field, k, Element{i}) : eval_B(field, k, Element{i});
    }
    return out;
}

bool is_permutation(const Field& field, std::span<const Element> values) {
    if (values.size() != field.q()) {
        throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(field.q()) +
                                                   " values, got " + std::to_string(values.size()));
    }
    std::vector<bool> seen(field.q(), false);
    for (Element v : values) {
        if (!field.contains(v) || seen[v.index]) return false;
        seen[v.index] = true;
    }
    return true;
}

bool is_pp(const Field& field, Family family, std::uint64_t k) {
    if (family == Family::Both) return is_pp(field, Family::A, k) && is_pp(field, Family::B, k);
    return is_permutation(field, value_table(field, family, k));
}

SweepRecord sweep_record(const CriterionContext& ctx, std::uint64_t k, const SweepOptions& options) {
    const Field& field = ctx.field();
    require_exponent(field, k);
    SweepRecord r;
    r.q = field.q();
    r.k = k;
    r.gcd_ok = std::gcd(k, r.q - 1) == 1;
    r.a_pp = is_pp(field, Family::A, k);
    r.b_pp = is_pp(field, Family::B, k);
    r.k_is_p_power = is_p_power(k, field);
    if (r.gcd_ok) {
        r.k_prime = mod_inverse(static_cast<std::int64_t>(k), static_cast<std::int64_t>(r.q - 1));
        r.k_prime_binary = digits_binary(*r.k_prime, field.p(), field.e());
    }
    if (options.with_criterion) r.criterion_fact21 = fact21_criterion(ctx, k);
    if (options.with_girth) {
        r.girth_ge_8 = girth_at_least(MonomialGraph::for_exponent(field, k), 8, options.girth);
    }
    return r;
}

SweepRecord sweep_record(const Field& field, std::uint64_t k, bool with_girth) {
    SweepOptions options;
    options.with_girth = with_girth;
    return sweep_record(CriterionContext(field), k, options);
}

std::vector<SweepRecord> sweep(const Field& field, const SweepOptions& options, unsigned jobs) {
    const CriterionContext ctx(field);
    std::vector<SweepRecord> records(field.q() - 1);
    SweepOptions inner = options;
    inner.girth.jobs = 1;
    parallel_for(records.size(), jobs,
                 [&](std::size_t i) { records[i] = sweep_record(ctx, i + 1, inner); });
    return records;
}

ConjectureVerdict verdict_from_records(const Field& field, Family which,
                                       std::span<const SweepRecord> records) {
    ConjectureVerdict v;
    v.which = which;
    v.q = field.q();
    for (std::uint64_t power = 1, i = 0; i < field.e(); ++i, power *= field.p()) {
        v.p_powers.push_back(power);
    }
    for (const auto& r : records) {
        const bool hit = which == Family::A   ? r.a_pp
                         : which == Family::B ? r.b_pp
                                              : (r.a_pp && r.b_pp);
        if (hit) v.witnesses.push_back(r.k);
    }
    std::sort(v.witnesses.begin(), v.witnesses.end());
    if (which == Family::Both) {
        v.pass = std::all_of(v.witnesses.begin(), v.witnesses.end(),
                             [&](std::uint64_t k) { return is_p_power(k, field); });
    } else {
        v.pass = v.witnesses == v.p_powers;
    }
    return v;
}

ConjectureVerdict conjecture_verdict(const Field& field, Family which, unsigned jobs) {
    std::vector<SweepRecord> records(field.q() - 1);
    parallel_for(records.size(), jobs, [&](std::size_t i) {
        auto& r = records[i];
        r.k = i + 1;
        r.a_pp = which != Family::B && is_pp(field, Family::A, r.k);
        r.b_pp = which != Family::A && is_pp(field, Family::B, r.k);
    });
    return verdict_from_records(field, which, records);
}

}  // namespace fqlab
