#include "segmil/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace segmil {

void ScoredSet::validate() const {
    if (ids.size() != scores.size() || scores.size() != labels.size())
        throw InputError("ScoredSet: parallel lists have different lengths");
    for (int l : labels)
        if (l != 0 && l != 1) throw InputError("ScoredSet: labels must be 0/1");
}

bool ScoredSet::two_class() const {
    bool pos = false, neg = false;
    for (int l : labels) (l ? pos : neg) = true;
    return pos && neg;
}

double roc_auc(const ScoredSet& s) {
    s.validate();
    const std::size_t n = s.size();
    if (!s.two_class())
        throw EvalError("roc_auc: single-class input at level '" + s.level + "'");

    // midrank assignment over score-sorted order
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s.scores[a] < s.scores[b]; });

    std::vector<double> rank(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && s.scores[order[j + 1]] == s.scores[order[i]]) ++j;
        const double mid = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[order[k]] = mid;
        i = j + 1;
    }

    double rank_sum_pos = 0.0;
    std::size_t n_pos = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (s.labels[k]) {
            rank_sum_pos += rank[k];
            ++n_pos;
        }
    const std::size_t n_neg = n - n_pos;
    const double u = rank_sum_pos - 0.5 * static_cast<double>(n_pos) * (static_cast<double>(n_pos) + 1.0);
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) throw InputError("quantile_sorted: empty input");
    if (q <= 0.0) return sorted.front();
    if (q >= 1.0) return sorted.back();
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

BootstrapResult bootstrap_median_ci(const ScoredSet& s, int n_resamples, std::uint64_t seed) {
    s.validate();
    if (n_resamples < 1) throw InputError("bootstrap_median_ci: n_resamples must be >= 1");
    if (!s.two_class())
        throw EvalError("bootstrap_median_ci: single-class input at level '" + s.level + "'");

    const std::size_t n = s.size();
    Rng rng(seed);
    BootstrapResult out;
    out.samples.reserve(static_cast<std::size_t>(n_resamples));
    const long max_attempts = 1000L * n_resamples;
    long attempts = 0;
    ScoredSet resample;
    resample.level = s.level;
    while (out.samples.size() < static_cast<std::size_t>(n_resamples)) {
        if (++attempts > max_attempts)
            throw EvalError("bootstrap_median_ci: could not draw a two-class resample at level '" + s.level + "'");
        resample.ids.clear();
        resample.scores.clear();
        resample.labels.clear();
        for (std::size_t k = 0; k < n; ++k) {
            const auto idx = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
            resample.add(s.ids[idx], s.scores[idx], s.labels[idx]);
        }
        if (!resample.two_class()) {
            ++out.redraws;
            continue;
        }
        out.samples.push_back(roc_auc(resample));
    }
    std::vector<double> sorted = out.samples;
    std::sort(sorted.begin(), sorted.end());
    out.median = quantile_sorted(sorted, 0.5);
    out.lo95 = quantile_sorted(sorted, 0.025);
    out.hi95 = quantile_sorted(sorted, 0.975);
    return out;
}

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    // continued fraction (Lentz), standard formulation
    const auto betacf = [](double aa, double bb, double xx) {
        constexpr int kMaxIter = 300;
        constexpr double kEps = 3e-16, kFpMin = 1e-300;
        const double qab = aa + bb, qap = aa + 1.0, qam = aa - 1.0;
        double c = 1.0, d = 1.0 - qab * xx / qap;
        if (std::abs(d) < kFpMin) d = kFpMin;
        d = 1.0 / d;
        double h = d;
        for (int m = 1; m <= kMaxIter; ++m) {
            const int m2 = 2 * m;
            double num = m * (bb - m) * xx / ((qam + m2) * (aa + m2));
            d = 1.0 + num * d;
            if (std::abs(d) < kFpMin) d = kFpMin;
            c = 1.0 + num / c;
            if (std::abs(c) < kFpMin) c = kFpMin;
            d = 1.0 / d;
            h *= d * c;
            num = -(aa + m) * (qab + m) * xx / ((aa + m2) * (qap + m2));
            d = 1.0 + num * d;
            if (std::abs(d) < kFpMin) d = kFpMin;
            c = 1.0 + num / c;
            if (std::abs(c) < kFpMin) c = kFpMin;
            d = 1.0 / d;
            const double del = d * c;
            h *= del;
            if (std::abs(del - 1.0) < kEps) break;
        }
        return h;
    };
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                            b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
    if (!std::isfinite(t)) return 0.0;
    if (df <= 0.0) throw InputError("student_t_two_sided_p: df must be positive");
    const double x = df / (df + t * t);
    return incomplete_beta(0.5 * df, 0.5, x);
}

WelchResult welch_t(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() < 2 || b.size() < 2) throw InputError("welch_t: both samples need at least 2 values");
    const auto na = static_cast<double>(a.size());
    const auto nb = static_cast<double>(b.size());
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / na;
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / nb;
    double va = 0.0, vb = 0.0;
    for (double v : a) va += (v - ma) * (v - ma);
    for (double v : b) vb += (v - mb) * (v - mb);
    va /= (na - 1.0);
    vb /= (nb - 1.0);

    WelchResult out;
    const double se2 = va / na + vb / nb;
    if (se2 == 0.0) {
        // no variance anywhere: identical means give p = 1 by convention
        out.df = na + nb - 2.0;
        if (ma == mb) {
            out.t = 0.0;
            out.p = 1.0;
        } else {
            out.t = ma > mb ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
            out.p = 0.0;
        }
        return out;
    }
    out.t = (ma - mb) / std::sqrt(se2);
    out.df = se2 * se2 / (va * va / (na * na * (na - 1.0)) + vb * vb / (nb * nb * (nb - 1.0)));
    out.p = student_t_two_sided_p(out.t, out.df);
    return out;
}

MacroAucResult segment_macro_auc(const std::vector<ScoredSet>& per_segment) {
    MacroAucResult out;
    double sum = 0.0;
    for (const auto& s : per_segment) {
        s.validate();
        if (!s.two_class()) {
            out.excluded.push_back(s.level);
            continue;
        }
        sum += roc_auc(s);
        ++out.included;
    }
    if (out.included == 0) throw EvalError("segment_macro_auc: every segment set is single-class");
    out.value = sum / out.included;
    return out;
}

}  // namespace segmil
