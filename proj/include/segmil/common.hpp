// Shared error types, deterministic RNG, and small concurrency helpers.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace segmil {

// Error taxonomy. Config/schema problems map to CLI exit code 1,
// everything else to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic RNG with hand-rolled distributions so results do not depend
// on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t raw() {
        // xorshift* (Marsaglia); period 2^64-1, plenty for data generation
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dull;
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // inclusive bounds, rejection sampling to avoid modulo bias
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw InputError("Rng::uniform_int: lo > hi");
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<std::int64_t>(raw());  // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t v;
        do {
            v = raw();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % range);
    }

    double normal() {
        // Box-Muller, one value per call
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    bool bernoulli(double p) { return uniform() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

// Derive an independent stream for a sub-task (e.g. one patient) from a base
// seed. splitmix64 finalizer decorrelates neighbouring ids.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t id) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (id + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Static-partition parallel loop. Work item i is always executed by worker
// i % n_threads, so any per-worker accumulation has a fixed assignment.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, unsigned n_threads = 0) {
    if (n == 0) return;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned t = n_threads == 0 ? hw : n_threads;
    if (t > n) t = static_cast<unsigned>(n);
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(t);
    workers.reserve(t);
    for (unsigned w = 0; w < t; ++w) {
        workers.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < n; i += t) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : workers) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace segmil
