#pragma once

// Waiting-time distributions between emission/absorption events via three
// independent routes: closed form, truncated-Fock numeric evaluation of the
// jump/no-jump superoperator expression, and stochastic trajectory sampling.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lmg/dissipation.hpp"

namespace lmg {

// w_{mu nu}: the second letter is the earlier (conditioning) jump, the first
// the later one.
enum class WtdKind { EE, AE, EA, AA };

const char* to_string(WtdKind kind);

// Closed-form waiting-time density. gamma_rate is the dressed rate
// A^2 Gamma(omega) (or the polaron analogue) of the frame in question.
// n_b = 0 is only meaningful for EA (the low-temperature limit Gamma e^{-Gamma tau}).
double wtd_analytic(WtdKind kind, double tau, double gamma_rate, double n_b);

// Direct Fock-space evaluation: apply the conditioning jump to the thermal
// state, decay each |n><n| under the no-jump Liouvillian for tau, apply the
// second jump, trace, and normalize by Gamma n_B (1+n_B). Independent of the
// closed forms above. Throws TruncationError if the geometric tail mass at
// n_max exceeds 1e-10.
double wtd_numeric(WtdKind kind, double tau, double gamma_rate, double n_b, int n_max);

enum class JumpType : std::uint8_t { Emission = 0, Absorption = 1 };

struct JumpEvent {
    double time;
    JumpType type;
};

// Time-ordered jump log of one stochastic trajectory; reproducible given the
// seed.
struct JumpRecord {
    std::vector<JumpEvent> events;
    std::uint64_t seed{0};
    double total_time{0.0};
};

// Gillespie sampling of the thermal birth-death chain: from Fock state n,
// emission at rate f_emit*n and absorption at rate f_absorb*(n+1); the
// initial occupation is drawn from the thermal distribution.
JumpRecord sample_trajectory(const RatePair& rates, std::int64_t n_jumps,
                             std::uint64_t seed);

struct WtdHistogram {
    double bin_width{0.0};
    std::vector<double> density;         // per-bin density estimate
    std::int64_t conditioning_events{0}; // pairs whose earlier jump matched nu

    double center(int bin) const { return (bin + 0.5) * bin_width; }
};

// Consecutive-pair statistics: intervals where the earlier jump has the
// conditioning type and the immediately following jump the later type,
// normalized per conditioning event so that the EE+AE (or AA+EA) histograms
// integrate to one. Throws InsufficientStatisticsError below 10^4
// conditioning events.
WtdHistogram wtd_histogram(const JumpRecord& record, WtdKind kind, double bin_width,
                           double max_tau);

struct PeakScanPoint {
    double gamma_x{0.0};
    double value{0.0};
    bool skipped{false}; // inside the critical guard radius
};

// w_ee(tau_fixed) of the chosen frame across a coupling grid; guarded points
// are marked skipped rather than dropped.
std::vector<PeakScanPoint> wtd_peak_scan(Frame frame, std::span<const double> gammas,
                                         double tau_fixed, double h,
                                         const BathParams& bath);

// Flat event log (columns: time, type) with the seed and total time in a
// #-prefixed header.
void write_jump_record_csv(const JumpRecord& record, std::ostream& os);
JumpRecord read_jump_record_csv(std::istream& is);

} // namespace lmg
