#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fqlab/criterion.hpp"
#include "fqlab/gf.hpp"
#include "fqlab/graphs.hpp"

namespace fqlab {

/// Which polynomial family a test concerns. `Both` means "A_k and B_k simultaneously".
enum class Family { A, B, Both };

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view text) noexcept;

/// A_k(x) = x^k ((x+1)^k - x^k).
Element eval_A(const Field& field, std::uint64_t k, Element x);

/// B_k(x) = ((x+1)^{2k} - 1) x^{q-1-k} - 2 x^{q-1}, with 0^0 = 1.
Element eval_B(const Field& field, std::uint64_t k, Element x);

/// Values of A_k or B_k at every element, indexed by enumeration order.
std::vector<Element> value_table(const Field& field, Family family, std::uint64_t k);

/// True iff the q values are pairwise distinct. LengthMismatch unless values.size() == q.
bool is_permutation(const Field& field, std::span<const Element> values);

/// Direct test: evaluates the family and checks injectivity. Both requires A_k and B_k.
bool is_pp(const Field& field, Family family, std::uint64_t k);

struct SweepOptions {
    bool with_criterion = true;
    bool with_girth = false;
    GirthOptions girth;
};

struct SweepRecord {
    std::uint64_t q = 0;
    std::uint64_t k = 0;
    bool gcd_ok = false;
    bool a_pp = false;
    bool b_pp = false;
    bool k_is_p_power = false;
    std::optional<std::uint64_t> k_prime;
    std::optional<bool> k_prime_binary;
    std::optional<bool> criterion_fact21;
    std::optional<bool> girth_ge_8;

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

SweepRecord sweep_record(const CriterionContext& ctx, std::uint64_t k, const SweepOptions& options);
SweepRecord sweep_record(const Field& field, std::uint64_t k, bool with_girth);

/// Records for k = 1..q-1 in ascending k, whatever the completion order of workers.
std::vector<SweepRecord> sweep(const Field& field, const SweepOptions& options, unsigned jobs = 1);

struct ConjectureVerdict {
    Family which = Family::A;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> witnesses;  // k for which the family (or both) is a PP
    std::vector<std::uint64_t> p_powers;
    bool pass = false;
};

/// A and B: witnesses must equal the p-powers. Both: every witness must be a p-power.
ConjectureVerdict verdict_from_records(const Field& field, Family which,
                                       std::span<const SweepRecord> records);

ConjectureVerdict conjecture_verdict(const Field& field, Family which, unsigned jobs = 1);

}  // namespace fqlab
