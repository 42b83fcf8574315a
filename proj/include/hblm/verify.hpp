#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hblm/rings.hpp"

namespace hblm {

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus s);

struct Counts {
    std::uint64_t n = 0;
    std::uint64_t dp = 0;
    std::uint64_t k = 0;
    std::uint64_t r = 0;

    friend bool operator==(const Counts&, const Counts&) = default;
};

struct VerificationReport {
    std::string check;
    RingSpec ring;
    CheckStatus status = CheckStatus::Pass;
    Counts counts;
    std::vector<std::string> witnesses;
    /// Free-form observations: skip reasons, disagreements worth reading.
    std::vector<std::string> notes;
    std::int64_t wall_ms = 0;
};

struct CheckOptions {
    std::uint64_t budget = 10'000'000;
    unsigned workers = 1;
    /// Negative control for beta_duality: flips the sign of one entry of T
    /// when forming the complement chart. Only meaningful for odd p.
    bool corrupt_beta_sign = false;
};

/// Check ids, in suite order:
///   dp_equals_k               N^DP = N^K pointwise
///   beta_duality              chart involution C -> -T C^T T exchanges isotropy and (K)
///   trace_form_duality        C^T = JCJ iff isotropic; trace-form and coordinate complements agree
///   unramified_collapse       e = 1: every point satisfies (R), (DP), (K)
///   rapoport_strict           field base, e >= 2: N^R strictly inside N^DP, the gap is the i >= 1 types
///   nonisotropic_deformation  <(pi+eps) f1, pi f2> is in N but neither (DP) nor (K)
///   isotropic_lift            O-span of pi^e1 f1 + x eps f2, pi^e2 f2 + eps f1 is isotropic in N iff e1 + e2 = e
///   type_criterion            field base: (K) iff every factor has e1 + e2 = e
///   charpol_square            charpol(pi; M) = P * Q and, on DP points, P = X^e - p*u
const std::vector<std::string>& all_checks();
bool is_known_check(const std::string& name);

/// Throws UnknownCheck; BudgetExceeded propagates. Non-applicable checks
/// return status Skipped with the reason in notes.
VerificationReport run_check(const std::string& name, const RingSpec& spec, const CheckOptions& opts);

/// Reports ordered by ring, then by check.
std::vector<VerificationReport> run_suite(const std::vector<RingSpec>& grid, const std::vector<std::string>& checks,
                                          const CheckOptions& opts);

/// F2, F3, F5 with e = 1, 2, 3; F4 with e = 1; F2[eps], F3[eps], Z/4, Z/9 with e = 2; F2[eps] with e = 3.
std::vector<RingSpec> default_grid();

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace hblm
