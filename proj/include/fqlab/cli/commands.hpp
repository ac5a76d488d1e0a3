#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "fqlab/cli/report.hpp"
#include "fqlab/graphs.hpp"
#include "fqlab/gf.hpp"
#include "fqlab/pp.hpp"

namespace fqlab::cli {

/// Largest q at which verify-all also runs the binomial-sum criteria.
inline constexpr std::uint64_t kVerifyCriterionCap = 243;

struct RunContext {
    std::uint64_t field_cap = kDefaultFieldCap;
    std::uint32_t girth_cap = kDefaultGirthCap;
    unsigned jobs = 0;  // 0: all hardware threads
    std::optional<std::filesystem::path> cache_dir;
    bool verbose = false;  // progress lines on stderr

    /// Caps from FQLAB_FIELD_CAP / FQLAB_GIRTH_CAP when set.
    static RunContext from_environment();
};

struct SweepArgs {
    std::vector<std::uint64_t> qs;
    Family which = Family::A;
    bool with_criterion = true;
    bool with_girth = false;
};

struct IdentityArgs {
    std::vector<std::uint64_t> qs;  // shifted-row identity grids
    std::vector<std::uint32_t> ps;  // closing-sum grids
};

struct GirthArgs {
    std::uint64_t q = 0;
    std::optional<std::uint64_t> k;
    std::optional<std::array<std::uint64_t, 4>> exponents;  // (f_x, f_y, g_x, g_y)
};

RunReport cmd_sweep(const SweepArgs& args, const RunContext& ctx);
RunReport cmd_identities(const IdentityArgs& args, const RunContext& ctx);
RunReport cmd_girth(const GirthArgs& args, const RunContext& ctx);
RunReport cmd_verify_all(std::uint64_t q_max, const RunContext& ctx);
RunReport cmd_field_info(const std::vector<std::uint64_t>& qs, const RunContext& ctx);

/// Odd prime powers q <= q_max, ascending.
std::vector<std::uint64_t> odd_prime_powers_up_to(std::uint64_t q_max);

/// Rows describing the (q, k) sweep record.
nlohmann::json sweep_row(const SweepRecord& record);

}  // namespace fqlab::cli
