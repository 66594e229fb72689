#include "noe/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace noe {

std::optional<double> cohesion_value(long satisfied, long total) {
    if (total <= 0) return std::nullopt;
    return static_cast<double>(satisfied) / static_cast<double>(total);
}

std::vector<std::optional<double>> moving_average(
    const std::vector<std::optional<double>>& series, int window) {
    if (window <= 0) throw std::invalid_argument("moving_average: window must be positive");
    std::vector<std::optional<double>> out(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        const std::size_t lo = i + 1 >= static_cast<std::size_t>(window)
                                   ? i + 1 - static_cast<std::size_t>(window)
                                   : 0;
        double sum = 0.0;
        long count = 0;
        for (std::size_t j = lo; j <= i; ++j) {
            if (!series[j]) continue;
            sum += *series[j];
            ++count;
        }
        if (count > 0) out[i] = sum / static_cast<double>(count);
    }
    return out;
}

double sample_mean(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("sample_mean: empty sample");
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double sample_sd(const std::vector<double>& xs) {
    if (xs.size() < 2) throw std::invalid_argument("sample_sd: need at least two values");
    const double mean = sample_mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

namespace {

// Continued fraction for the regularized incomplete beta, evaluated with the
// modified Lentz method.
double beta_continued_fraction(double a, double b, double x) {
    constexpr int kMaxIterations = 400;
    constexpr double kEps = 3.0e-16;
    constexpr double kTiny = 1.0e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) return h;
    }
    return h;  // converged to working precision for every df/t this sees
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

}  // namespace

double student_t_two_sided_p(double t, double df) {
    if (!(df > 0.0)) throw std::invalid_argument("student_t_two_sided_p: df must be positive");
    if (std::isinf(t)) return 0.0;
    const double x = df / (df + t * t);
    const double p = regularized_incomplete_beta(df / 2.0, 0.5, x);
    if (p < 0.0) return 0.0;
    if (p > 1.0) return 1.0;
    return p;
}

TTestResult independent_t_test(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() < 2 || b.size() < 2) {
        throw std::invalid_argument("independent_t_test: need at least two values per sample");
    }
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double ma = sample_mean(a);
    const double mb = sample_mean(b);
    const double sda = sample_sd(a);
    const double sdb = sample_sd(b);
    const double va = sda * sda / na;
    const double vb = sdb * sdb / nb;

    TTestResult result;
    if (va + vb == 0.0) {
        result.df = na + nb - 2.0;
        if (ma == mb) {
            result.flag = TTestFlag::DegenerateIdentical;
            result.t = 0.0;
            result.p = 1.0;
        } else {
            result.flag = TTestFlag::DegenerateSeparated;
            result.t = ma > mb ? std::numeric_limits<double>::infinity()
                               : -std::numeric_limits<double>::infinity();
            result.p = 0.0;
        }
        return result;
    }

    result.t = (ma - mb) / std::sqrt(va + vb);
    result.df = (va + vb) * (va + vb) /
                (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
    result.p = student_t_two_sided_p(result.t, result.df);
    return result;
}

double glass_delta(const std::vector<double>& treatment, const std::vector<double>& control) {
    if (treatment.size() < 2 || control.size() < 2) {
        throw std::invalid_argument("glass_delta: need at least two values per sample");
    }
    const double sd_control = sample_sd(control);
    if (sd_control == 0.0) {
        throw std::invalid_argument("glass_delta: control sample has zero variance");
    }
    return (sample_mean(treatment) - sample_mean(control)) / sd_control;
}

std::string_view cohen_label(double delta) {
    const double magnitude = std::fabs(delta);
    if (magnitude < 0.2) return "negligible";
    if (magnitude < 0.5) return "small";
    if (magnitude < 0.8) return "medium";
    return "large";
}

}  // namespace noe
