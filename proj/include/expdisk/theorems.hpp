#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expdisk/geometry.hpp"
#include "expdisk/special_functions.hpp"

namespace expdisk {

// Sufficient-condition results whose hypotheses this library can check and
// whose membership claims it can certify numerically.
//
//   CH_P       Kummer map in the exp-Caratheodory class
//   CH_K       normalized Kummer map convex (exp sense)
//   CH_S       z * Kummer map starlike (exp sense)
//   CH_GDELTA  one-parameter convex family Lambda(1; 1 + delta)
//   CH_HDELTA  one-parameter starlike family z Phi(1; 1 + delta)
//   LOM_K      Lommel map convex
//   LOM_ALEX   Alexander transform of the Lommel map convex (and the map
//              itself starlike)
//   LOM_P      Lommel map over z in the exp-Caratheodory class
//   STR_P      generalized Struve map in the exp-Caratheodory class
//   STR_P_REC  recursion combination of Struve maps in the class
//   STR_K      normalized Struve map convex
//   STR_H      power-normalized Struve functions: convex + starlike claims
//   STR_L      same for the modified variant
//   STR_CONV   convolution closure: chi * f convex for convex f
enum class TheoremId {
    CH_P,
    CH_K,
    CH_S,
    CH_GDELTA,
    CH_HDELTA,
    LOM_K,
    LOM_ALEX,
    LOM_P,
    STR_P,
    STR_P_REC,
    STR_K,
    STR_H,
    STR_L,
    STR_CONV,
};

std::vector<TheoremId> all_theorems();
std::string to_string(TheoremId t);
std::optional<TheoremId> theorem_from_string(const std::string& name);

// Parameter bag; each checker documents what it needs and throws InputError
// when a required entry is missing, has a forbidden value, or must be real
// but is not.
struct TheoremParams {
    std::optional<cplx> a, c, mu, nu, kappa, cparam;
    std::optional<double> delta;
};

struct Condition {
    std::string label;
    bool satisfied = false;
    double slack = 0.0;  // distance to the boundary of the inequality
    bool strict = false;
    bool informational = false;  // notes that do not gate the hypothesis
};

struct HypothesisReport {
    TheoremId theorem = TheoremId::CH_P;
    TheoremParams params;
    std::vector<Condition> conditions;
    bool all_satisfied = false;
};

struct ClaimedMember {
    std::string label;
    AnalyticMap map;
    FunctionClass member_of = FunctionClass::exp_caratheodory;
};

struct InstanceReport {
    HypothesisReport hypothesis;
    std::vector<std::pair<std::string, SubordinationCertificate>> certificates;
    bool all_verified = false;  // hypothesis satisfied and all grids verified
};

// Evaluates every hypothesis inequality with its slack.  Parameter
// exclusions (for which the member functions are undefined) throw.
HypothesisReport check_hypothesis(TheoremId t, const TheoremParams& p);

// The map/class pairs the result asserts, as certified series on
// |z| <= r_ref.
std::vector<ClaimedMember> claimed_members(TheoremId t, const TheoremParams& p,
                                           double r_ref);

// check_hypothesis + a subordination certificate for every claimed member.
// Certification runs regardless of whether the hypothesis held.
InstanceReport verify_instance(TheoremId t, const TheoremParams& p,
                               const SamplingPlan& plan);

// Coefficientwise product of the normalized Struve map chi_{kappa,c} with a
// normalized map f claimed convex, certified for convexity.  Requires the
// STR_CONV hypothesis to hold for (kappa, c).
SubordinationCertificate convolution_closure_check(double kappa, cplx c,
                                                   const AnalyticMap& f,
                                                   const SamplingPlan& plan);

// Constants appearing on the right-hand sides of the hypothesis
// inequalities, always computed from e = exp(1) and sin(1) at call time.
namespace thresholds {

double kummer_disk_bound();   // (e-1)^2 (e+1) / e^2
double gdelta_radius();       // (e^3 - 2e^2 - e + 1) / (e^2 (e-1))
double hdelta_radius();       // (e^2 - 1) / e^2
double lommel_convex_rhs();   // e^4 - 3e^3 + 13e^2/4 - 3e/4 - 3/e + 2 - 2 sin 1
double lommel_alex_rhs();     // e^3 - e^2 + 13e/4 - 4
double struve_convex_rhs(double abs_c);  // (e+1)|c| + 4(e-1)^3 + 6(e-1)^2 + 6/e - 12/e^2
double struve_h_nu_bound();   // e * struve_convex_rhs(1) / (8 sin 1 + 6 - 2e) - 3/2

}  // namespace thresholds

}  // namespace expdisk
