#include "lmg/waiting_times.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "lmg/rng.hpp"

namespace lmg {

const char* to_string(WtdKind kind) {
    switch (kind) {
    case WtdKind::EE: return "ee";
    case WtdKind::AE: return "ae";
    case WtdKind::EA: return "ea";
    case WtdKind::AA: return "aa";
    }
    return "?";
}

namespace {

void check_wtd_args(WtdKind kind, double tau, double gamma_rate, double n_b) {
    if (tau < 0.0)
        throw std::domain_error("wtd: tau must be >= 0");
    if (!(gamma_rate > 0.0))
        throw std::domain_error("wtd: gamma_rate must be > 0");
    if (n_b < 0.0)
        throw std::domain_error("wtd: n_b must be >= 0");
    if (n_b == 0.0 && kind != WtdKind::EA)
        throw std::domain_error("wtd: n_b = 0 is only defined for the EA kind");
}

} // namespace

double wtd_analytic(WtdKind kind, double tau, double gamma_rate, double n_b) {
    check_wtd_args(kind, tau, gamma_rate, n_b);
    const double gt = gamma_rate * tau;
    const double u = (1.0 + 2.0 * n_b) * gt;

    if (u < 40.0) {
        const double eu = std::exp(u);
        const double den = (1.0 + n_b) * eu - n_b;
        const double den3 = den * den * den;
        switch (kind) {
        case WtdKind::EE:
        case WtdKind::AA:
            return 2.0 * gamma_rate * n_b * (1.0 + n_b) * std::exp((2.0 + 3.0 * n_b) * gt) / den3;
        case WtdKind::AE:
            return gamma_rate * n_b * std::exp((2.0 + 3.0 * n_b) * gt) *
                   (n_b + (1.0 + n_b) * eu) / den3;
        case WtdKind::EA:
            return gamma_rate * (1.0 + n_b) * std::exp((1.0 + n_b) * gt) *
                   (n_b + (1.0 + n_b) * eu) / den3;
        }
    }

    // Large-exponent path in log space; n_b e^{-u} is negligible against 1+n_b.
    const double r = n_b * std::exp(-u) / (1.0 + n_b);
    const double ln_den = std::log1p(n_b) + u + std::log1p(-r);
    const double ln_sum = std::log1p(n_b) + u + std::log1p(r); // n_b + (1+n_b)e^u
    double ln_w;
    switch (kind) {
    case WtdKind::EE:
    case WtdKind::AA:
        ln_w = std::log(2.0 * gamma_rate * n_b * (1.0 + n_b)) + (2.0 + 3.0 * n_b) * gt -
               3.0 * ln_den;
        break;
    case WtdKind::AE:
        ln_w = std::log(gamma_rate * n_b) + (2.0 + 3.0 * n_b) * gt + ln_sum - 3.0 * ln_den;
        break;
    case WtdKind::EA:
        ln_w = std::log(gamma_rate * (1.0 + n_b)) + (1.0 + n_b) * gt + ln_sum - 3.0 * ln_den;
        break;
    }
    return std::exp(ln_w);
}

double wtd_numeric(WtdKind kind, double tau, double gamma_rate, double n_b, int n_max) {
    check_wtd_args(kind, tau, gamma_rate, n_b);
    if (n_b == 0.0)
        throw std::domain_error("wtd_numeric: n_b must be > 0");
    if (n_max < 1)
        throw ValidationError("wtd_numeric: n_max must be >= 1");

    const double q = n_b / (1.0 + n_b);
    if (std::pow(q, n_max + 1) > 1e-10)
        throw TruncationError("wtd_numeric: tail mass at n_max=" + std::to_string(n_max) +
                              " exceeds 1e-10 for n_b=" + std::to_string(n_b));

    const double fe = gamma_rate * (1.0 + n_b);
    const double fa = gamma_rate * n_b;
    const bool earlier_e = (kind == WtdKind::EE || kind == WtdKind::AE);
    const bool later_e = (kind == WtdKind::EE || kind == WtdKind::EA);

    // P_n = (1-q) q^n; decay of |n><n| under L0 is exp(-[(1+nB)n + nB(1+n)] G t).
    double sum = 0.0, comp = 0.0;
    const double p0 = 1.0 / (1.0 + n_b);
    for (int n = 0; n <= n_max; ++n) {
        double c;
        if (earlier_e) {
            if (n == n_max)
                break; // needs P_{n+1}
            c = fe * p0 * std::pow(q, n + 1) * (n + 1);
        } else {
            if (n == 0)
                continue;
            c = fa * p0 * std::pow(q, n - 1) * n;
        }
        c *= std::exp(-((1.0 + n_b) * n + n_b * (n + 1.0)) * gamma_rate * tau);
        c *= later_e ? fe * n : fa * (n + 1.0);
        // Kahan compensation keeps the long geometric sums at full precision.
        const double y = c - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / (gamma_rate * n_b * (1.0 + n_b));
}

JumpRecord sample_trajectory(const RatePair& rates, std::int64_t n_jumps,
                             std::uint64_t seed) {
    if (!(rates.f_absorb > 0.0) || !(rates.f_emit > rates.f_absorb))
        throw ValidationError("sample_trajectory: need f_emit > f_absorb > 0");
    if (n_jumps < 0)
        throw ValidationError("sample_trajectory: n_jumps must be >= 0");

    const double nb = steady_occupation_diagonal(rates);
    const double q = nb / (1.0 + nb);
    Rng rng(seed);

    JumpRecord rec;
    rec.seed = seed;
    rec.events.reserve(static_cast<std::size_t>(n_jumps));

    int n = rng.geometric(q);
    double t = 0.0;
    for (std::int64_t step = 0; step < n_jumps; ++step) {
        const double re = rates.f_emit * n;
        const double ra = rates.f_absorb * (n + 1.0);
        const double total = re + ra;
        double tn = t + rng.exponential(total);
        if (tn <= t)
            tn = std::nextafter(t, std::numeric_limits<double>::infinity());
        t = tn;
        if (rng.uniform() * total < re) {
            --n;
            rec.events.push_back({t, JumpType::Emission});
        } else {
            ++n;
            rec.events.push_back({t, JumpType::Absorption});
        }
    }
    rec.total_time = t;
    return rec;
}

WtdHistogram wtd_histogram(const JumpRecord& record, WtdKind kind, double bin_width,
                           double max_tau) {
    if (!(bin_width > 0.0) || !(max_tau > bin_width))
        throw ValidationError("wtd_histogram: need max_tau > bin_width > 0");

    const JumpType later = (kind == WtdKind::EE || kind == WtdKind::EA)
                               ? JumpType::Emission
                               : JumpType::Absorption;
    const JumpType earlier = (kind == WtdKind::EE || kind == WtdKind::AE)
                                 ? JumpType::Emission
                                 : JumpType::Absorption;

    const int n_bins = static_cast<int>(std::ceil(max_tau / bin_width));
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n_bins), 0);
    std::int64_t conditioning = 0;

    for (std::size_t i = 0; i + 1 < record.events.size(); ++i) {
        if (record.events[i].type != earlier)
            continue;
        ++conditioning;
        if (record.events[i + 1].type != later)
            continue;
        const double dt = record.events[i + 1].time - record.events[i].time;
        if (dt >= max_tau)
            continue;
        ++counts[static_cast<std::size_t>(dt / bin_width)];
    }

    if (conditioning < 10000)
        throw InsufficientStatisticsError(
            "wtd_histogram: only " + std::to_string(conditioning) + " '" +
            std::string(1, earlier == JumpType::Emission ? 'e' : 'a') +
            "' conditioning events, need >= 10000");

    WtdHistogram hist;
    hist.bin_width = bin_width;
    hist.conditioning_events = conditioning;
    hist.density.resize(static_cast<std::size_t>(n_bins));
    for (int b = 0; b < n_bins; ++b)
        hist.density[static_cast<std::size_t>(b)] =
            static_cast<double>(counts[static_cast<std::size_t>(b)]) /
            (static_cast<double>(conditioning) * bin_width);
    return hist;
}

std::vector<PeakScanPoint> wtd_peak_scan(Frame frame, std::span<const double> gammas,
                                         double tau_fixed, double h,
                                         const BathParams& bath) {
    std::vector<PeakScanPoint> out;
    out.reserve(gammas.size());
    for (double g : gammas) {
        PeakScanPoint pt;
        pt.gamma_x = g;
        try {
            const RatePair r =
                (frame == Frame::Bms) ? rates_bms(h, g, bath) : rates_polaron(h, g, bath);
            const double geff = r.gamma_eff();
            pt.value = wtd_analytic(WtdKind::EE, tau_fixed, geff, r.f_absorb / geff);
        } catch (const CriticalPointError&) {
            pt.skipped = true;
            pt.value = std::numeric_limits<double>::quiet_NaN();
        }
        out.push_back(pt);
    }
    return out;
}

void write_jump_record_csv(const JumpRecord& record, std::ostream& os) {
    char buf[40];
    os << "# seed=" << record.seed << "\n";
    std::snprintf(buf, sizeof buf, "%.17g", record.total_time);
    os << "# total_time=" << buf << "\n";
    os << "time,type\n";
    for (const JumpEvent& ev : record.events) {
        std::snprintf(buf, sizeof buf, "%.17g", ev.time);
        os << buf << ',' << (ev.type == JumpType::Emission ? 'e' : 'a') << "\n";
    }
}

JumpRecord read_jump_record_csv(std::istream& is) {
    JumpRecord rec;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                continue;
            const std::string key = line.substr(2, eq - 2);
            const std::string val = line.substr(eq + 1);
            if (key == "seed")
                rec.seed = std::stoull(val);
            else if (key == "total_time")
                rec.total_time = std::stod(val);
            continue;
        }
        if (line.rfind("time,", 0) == 0)
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ValidationError("jump record: malformed line '" + line + "'");
        JumpEvent ev;
        ev.time = std::stod(line.substr(0, comma));
        ev.type = line[comma + 1] == 'e' ? JumpType::Emission : JumpType::Absorption;
        rec.events.push_back(ev);
    }
    return rec;
}

} // namespace lmg
