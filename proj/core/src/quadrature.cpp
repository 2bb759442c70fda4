#include "evanescent/quadrature.hpp"

#include "evanescent/bessel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace evanescent {

namespace {

using complex = std::complex<double>;

constexpr double eps = std::numeric_limits<double>::epsilon();

// 21-point Kronrod abscissae (descending, last is the centre) and weights,
// with the embedded 10-point Gauss weights for the odd-indexed nodes.
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525361801, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Interval
{
    double a;
    double b;
    complex value;
    double error;
    int piece;  // 0 = leading piece, 1 = panel integrand
};

struct ByError
{
    bool operator()(const Interval& l, const Interval& r) const { return l.error < r.error; }
};

double zero_of(int order, std::size_t n) { return order == 0 ? j0_zero(n) : j1_zero(n); }

// Walks the panel ends: zeros of J_order(scale u) above the start, never
// more than max_width apart.
class PanelBreaks
{
public:
    PanelBreaks(int order, double scale, double start, double max_width)
        : order_(order), scale_(scale), max_width_(max_width)
    {
        if (scale_ > 0.0) {
            const double guess = start * scale_ / std::numbers::pi - 2.0;
            n_ = guess > 1.0 ? static_cast<std::size_t>(guess) : 1;
            next_zero_ = zero_of(order_, n_) / scale_;
            while (next_zero_ <= start) next_zero_ = zero_of(order_, ++n_) / scale_;
        }
    }

    double next(double a)
    {
        const double capped = a + max_width_;
        if (scale_ <= 0.0 || capped < next_zero_) return capped;
        const double b = next_zero_;
        next_zero_ = zero_of(order_, ++n_) / scale_;
        return b;
    }

private:
    int order_;
    double scale_;
    double max_width_;
    std::size_t n_ = 1;
    double next_zero_ = std::numeric_limits<double>::infinity();
};

// Max-heap of intervals keyed on error estimate, with running sums.
class Partition
{
public:
    explicit Partition(std::array<const ComplexIntegrand*, 2> pieces) : pieces_(pieces) {}

    void add(double a, double b, int piece)
    {
        const RuleEstimate r = gauss_kronrod21(*pieces_[piece], a, b);
        push({a, b, r.value, r.error, piece});
    }

    // Bisects the worst interval; false when it can no longer be split.
    bool refine_worst()
    {
        std::ranges::pop_heap(heap_, ByError{});
        const Interval worst = heap_.back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)
            || (worst.b - worst.a) <= 64.0 * eps * std::max(std::abs(worst.a), std::abs(worst.b))) {
            std::ranges::push_heap(heap_, ByError{});
            return false;
        }
        heap_.pop_back();
        value_ -= worst.value;
        error_ -= worst.error;
        add(worst.a, mid, worst.piece);
        add(mid, worst.b, worst.piece);
        return true;
    }

    complex value() const { return value_; }
    // Guarded against drift from the incremental updates.
    double error() const { return std::max(error_, 0.0); }
    int size() const { return static_cast<int>(heap_.size()); }

    void resum()
    {
        value_ = 0.0;
        error_ = 0.0;
        for (const Interval& i : heap_) {
            value_ += i.value;
            error_ += i.error;
        }
    }

private:
    void push(const Interval& iv)
    {
        heap_.push_back(iv);
        std::ranges::push_heap(heap_, ByError{});
        value_ += iv.value;
        error_ += iv.error;
    }

    std::array<const ComplexIntegrand*, 2> pieces_;
    std::vector<Interval> heap_;
    complex value_ = 0.0;
    double error_ = 0.0;
};

// Refines a self-contained partition until error <= max(abs_tol, rel_tol |value|).
bool refine(Partition& part, double abs_tol, double rel_tol, int max_intervals)
{
    while (part.error() > std::max(abs_tol, rel_tol * std::abs(part.value()))) {
        if (part.size() >= max_intervals || !part.refine_worst()) {
            part.resum();
            return part.error() <= std::max(abs_tol, rel_tol * std::abs(part.value()));
        }
    }
    part.resum();
    return true;
}

}  // namespace

void QuadratureConfig::validate() const
{
    if (!(rel_tol > 0.0 && rel_tol <= 1e-3)) throw std::invalid_argument("rel_tol must lie in (0, 1e-3]");
    if (max_segments < 16) throw std::invalid_argument("max_segments must be at least 16");
    if (!(tail_epsilon > 0.0 && tail_epsilon < 1.0)) throw std::invalid_argument("tail_epsilon must lie in (0, 1)");
    if (!(abs_tol_floor >= 0.0)) throw std::invalid_argument("abs_tol_floor must be non-negative");
}

RuleEstimate gauss_kronrod21(const ComplexIntegrand& f, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<complex, 10> f1{};
    std::array<complex, 10> f2{};
    const complex fc = f(centre);
    complex res_g = 0.0;
    complex res_k = wgk[10] * fc;
    double res_abs = wgk[10] * std::abs(fc);

    for (int j = 0; j < 10; ++j) {
        const double dx = half * xgk[j];
        f1[j] = f(centre - dx);
        f2[j] = f(centre + dx);
        const complex sum = f1[j] + f2[j];
        res_k += wgk[j] * sum;
        res_abs += wgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) res_g += wg[j / 2] * sum;
    }

    const complex mean = 0.5 * res_k;
    double res_asc = wgk[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j) res_asc += wgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    const double len = std::abs(half);
    res_abs *= len;
    res_asc *= len;
    double err = std::abs((res_k - res_g) * half);
    if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * res_abs, err);

    return {res_k * half, err};
}

AdaptiveResult integrate_adaptive(const ComplexIntegrand& f, double a, double b, double abs_tol,
                                  double rel_tol, int max_intervals)
{
    Partition part({&f, &f});
    part.add(a, b, 0);
    const bool ok = refine(part, abs_tol, rel_tol, max_intervals);
    return {part.value(), part.error(), part.size(), ok};
}

QuadratureOutcome integrate_bessel_panels(const BesselPanelPlan& plan, const QuadratureConfig& cfg)
{
    cfg.validate();
    if (plan.bessel_order != 0 && plan.bessel_order != 1) throw std::invalid_argument("bessel_order must be 0 or 1");
    if (!(plan.max_panel_width > 0.0)) throw std::invalid_argument("max_panel_width must be positive");

    const ComplexIntegrand none = [](double) { return complex{}; };
    const ComplexIntegrand& lead = plan.leading ? plan.leading->integrand : none;
    Partition part({&lead, &plan.integrand});
    const int interval_budget = 64 * cfg.max_segments + 2000;

    // Each new panel is refined against the running total so that the
    // stopping test sees settled panel values.
    auto settle = [&](double abs_floor) {
        while (part.error() > std::max(abs_floor, 0.1 * cfg.rel_tol * std::abs(part.value()))) {
            if (part.size() >= interval_budget || !part.refine_worst()) break;
        }
    };

    if (plan.leading) {
        part.add(plan.leading->lo, plan.leading->hi, 0);
        settle(cfg.abs_tol_floor);
    }

    PanelBreaks breaks(plan.bessel_order, plan.scale, plan.start, plan.max_panel_width);
    double a = plan.start;
    int panels = 0;
    bool tail_ok = false;
    while (panels < cfg.max_segments) {
        const double b = breaks.next(a);
        const complex before = part.value();
        part.add(a, b, 1);
        settle(cfg.abs_tol_floor);
        ++panels;
        a = b;

        const double total = std::abs(part.value());
        const double contribution = std::abs(part.value() - before);
        const bool small_panel = contribution <= std::max(cfg.tail_epsilon * total, cfg.abs_tol_floor);
        const bool small_tail = plan.tail_bound(a) <= std::max(0.5 * cfg.rel_tol * total, cfg.abs_tol_floor);
        if (small_panel && small_tail) {
            tail_ok = true;
            break;
        }
    }

    part.resum();
    const double tail = plan.tail_bound(a);
    bool converged = tail_ok;
    while (part.error() + tail > std::max(cfg.rel_tol * std::abs(part.value()), cfg.abs_tol_floor)) {
        if (part.size() >= interval_budget || !part.refine_worst()) {
            converged = false;
            break;
        }
    }
    part.resum();
    const double error = part.error() + tail;
    if (error > std::max(cfg.rel_tol * std::abs(part.value()), cfg.abs_tol_floor)) converged = false;

    return {part.value(), error, panels, part.size(), converged};
}

}  // namespace evanescent
