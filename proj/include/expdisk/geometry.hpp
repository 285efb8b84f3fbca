#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expdisk/power_series.hpp"

namespace expdisk {

enum class MapKind { raw, normalized };

// A disk map carried as a certified truncated series together with its
// normalization convention: raw maps satisfy p(0) = 1, normalized maps
// f(0) = 0 and f'(0) = 1.
struct AnalyticMap {
    PowerSeries series;
    MapKind kind = MapKind::raw;
};

// The three classes certified by this library: maps subordinate to e^z, and
// maps whose starlike / convex quantity is subordinate to e^z.
enum class FunctionClass { exp_caratheodory, exp_starlike, exp_convex };

struct SamplingPlan {
    std::vector<double> radii{0.9, 0.99, 0.999};
    std::size_t angles = 4096;       // per circle, >= 256
    std::size_t refine_factor = 8;   // local refinement ratio per round
};

// Stock plan; the EXPDISK_ANGLES environment variable overrides the angle
// count (values below 256 are rejected).
SamplingPlan default_plan();

enum class CertificateStatus { verified_on_grid, refuted, inconclusive };

struct SubordinationCertificate {
    CertificateStatus status = CertificateStatus::inconclusive;
    double max_log_mod = 0.0;   // max |Log p| over all samples
    cplx witness = 0.0;         // sample attaining the max (or a zero of p)
    double margin = 0.0;        // 1 - max_log_mod
    SamplingPlan plan_used;
    bool zero_encountered = false;
};

// (inside, |Log w|).  w = 0 reports (false, +infinity).
std::pair<bool, double> in_exp_disk(cplx w);

// z f'(z) / f(z) and 1 + z f''(z) / f'(z) as raw-normalized quotient series.
// Both require a normalized input map.
AnalyticMap starlike_quantity(const AnalyticMap& f);
AnalyticMap convex_quantity(const AnalyticMap& f);

// Samples |Log p| on the plan's circles (with three rounds of local angular
// refinement around each circle's running maximum) and certifies whether the
// image of the sampled grid stays inside the exponential disk |Log w| < 1.
//
//   refuted       max > 1 + 1e-12 at some sample, or p vanishes at a sample
//   inconclusive  max within [1 - 1e-9, 1 + 1e-12]
//   verified_on_grid otherwise
//
// Requires a raw map with p(0) = 1 and plan radii inside the series domain.
SubordinationCertificate certify_subordination_to_exp(const AnalyticMap& p,
                                                      const SamplingPlan& plan);

// Dispatches to the defining quantity of the class and certifies it.
SubordinationCertificate class_membership(const AnalyticMap& f, FunctionClass cls,
                                          const SamplingPlan& plan);

// Coefficientwise (Hadamard) product, truncated at the shorter operand.
// Operands must share a normalization convention, which the product keeps.
AnalyticMap hadamard(const AnalyticMap& a, const AnalyticMap& b);

// Integral transforms acting on coefficients: a_n -> a_n / n and
// a_n -> 2 a_n / (n + 1).  Normalized maps only.
AnalyticMap alexander(const AnalyticMap& f);
AnalyticMap libera(const AnalyticMap& f);

// Truncations of the convolution kernels reproducing the identity, the
// Alexander transform and the Libera transform:
//   z/(1-z),  -log(1-z),  -2 (z + log(1-z)) / z.
AnalyticMap geometric_kernel(std::size_t degree);
AnalyticMap alexander_kernel(std::size_t degree);
AnalyticMap libera_kernel(std::size_t degree);

std::string to_string(CertificateStatus s);
std::string to_string(FunctionClass c);
std::optional<FunctionClass> class_from_string(const std::string& name);

}  // namespace expdisk
