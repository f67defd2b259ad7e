#include "grcodes/distance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "grcodes/error.hpp"

namespace grcodes {

std::size_t distance_cap() {
    if (const char* env = std::getenv("GRCODES_DISTANCE_CAP")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 62) return static_cast<std::size_t>(v);
    }
    return kDefaultDistanceCap;
}

namespace {

struct Range {
    std::uint64_t lo;
    std::uint64_t hi;
};

std::vector<Range> split(std::uint64_t total, std::size_t parts) {
    parts = std::max<std::size_t>(1, std::min<std::uint64_t>(parts, total));
    std::vector<Range> out;
    const std::uint64_t step = total / parts, extra = total % parts;
    std::uint64_t lo = 0;
    for (std::size_t i = 0; i < parts; ++i) {
        const std::uint64_t len = step + (i < extra ? 1 : 0);
        out.push_back({lo, lo + len});
        lo += len;
    }
    return out;
}

template <class Worker>
std::vector<std::size_t> run_parallel(const std::vector<Range>& ranges, Worker worker) {
    std::vector<std::size_t> best(ranges.size(), static_cast<std::size_t>(-1));
    if (ranges.size() == 1) {
        best[0] = worker(ranges[0]);
        return best;
    }
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (std::size_t t = 0; t < ranges.size(); ++t) {
        pool.emplace_back([&, t] { best[t] = worker(ranges[t]); });
    }
    for (auto& th : pool) th.join();
    return best;
}

// Binary codes: message index i in [1, 2^k) is visited as Gray code
// gray(i) = i ^ (i >> 1); going from i - 1 to i flips bit ctz(i).
DistanceResult binary_distance(const FpMatrix& basis, const DistanceOptions& opt) {
    const std::size_t k = basis.rows();
    const BitMatrix rows = BitMatrix::from(basis);
    const std::size_t words = rows.words();
    const std::uint64_t total = (std::uint64_t{1} << k) - 1;  // messages 1 .. 2^k - 1
    std::atomic<bool> stop{false};
    const std::size_t stop_at = opt.stop_at.value_or(0);

    auto worker = [&](Range r) -> std::size_t {
        // Visit message indices r.lo + 1 .. r.hi.
        std::size_t best = static_cast<std::size_t>(-1);
        const std::uint64_t start = r.lo;  // state before first step
        const std::uint64_t gray = start ^ (start >> 1);
        if (words == 1) {
            std::uint64_t cw = 0;
            for (std::size_t b = 0; b < k; ++b) {
                if ((gray >> b) & 1u) cw ^= rows.row(b)[0];
            }
            std::vector<std::uint64_t> single(k);
            for (std::size_t b = 0; b < k; ++b) single[b] = rows.row(b)[0];
            for (std::uint64_t i = r.lo + 1; i <= r.hi; ++i) {
                cw ^= single[static_cast<std::size_t>(std::countr_zero(i))];
                const auto w = static_cast<std::size_t>(std::popcount(cw));
                if (w < best) {
                    best = w;
                    if (best <= stop_at) {
                        stop = true;
                        break;
                    }
                }
                if ((i & 0xFFFFF) == 0 && stop.load(std::memory_order_relaxed)) break;
            }
            return best;
        }
        std::vector<std::uint64_t> cw(words, 0);
        for (std::size_t b = 0; b < k; ++b) {
            if ((gray >> b) & 1u) {
                const auto row = rows.row(b);
                for (std::size_t w = 0; w < words; ++w) cw[w] ^= row[w];
            }
        }
        for (std::uint64_t i = r.lo + 1; i <= r.hi; ++i) {
            const auto row = rows.row(static_cast<std::size_t>(std::countr_zero(i)));
            std::size_t weight = 0;
            for (std::size_t w = 0; w < words; ++w) {
                cw[w] ^= row[w];
                weight += static_cast<std::size_t>(std::popcount(cw[w]));
            }
            if (weight < best) {
                best = weight;
                if (best <= stop_at) {
                    stop = true;
                    break;
                }
            }
            if ((i & 0xFFFFF) == 0 && stop.load(std::memory_order_relaxed)) break;
        }
        return best;
    };

    const auto best = run_parallel(split(total, opt.threads), worker);
    DistanceResult res;
    res.distance = *std::min_element(best.begin(), best.end());
    res.codewords = total;
    res.exact = !(opt.stop_at && res.distance <= *opt.stop_at);
    return res;
}

// GF(p): the modular Gray code g_j = d_j - d_(j+1) (mod p) of the base-p
// digits d of i changes exactly one digit, by +1, from i to i + 1: digit
// v_p(i + 1).
DistanceResult prime_distance(const FpMatrix& basis, const DistanceOptions& opt) {
    const std::size_t k = basis.rows(), n = basis.cols();
    const std::uint32_t p = basis.modulus();
    const PrimeField f{p};
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= p;
    std::atomic<bool> stop{false};
    const std::size_t stop_at = opt.stop_at.value_or(0);

    auto worker = [&](Range r) -> std::size_t {
        std::size_t best = static_cast<std::size_t>(-1);
        // Digits of r.lo and its Gray image.
        std::vector<std::uint32_t> d(k + 1, 0);
        std::uint64_t x = r.lo;
        for (std::size_t j = 0; j < k; ++j) {
            d[j] = static_cast<std::uint32_t>(x % p);
            x /= p;
        }
        std::vector<std::uint32_t> cw(n, 0);
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint32_t g = f.sub(d[j], d[j + 1]);
            if (!g) continue;
            for (std::size_t c = 0; c < n; ++c) cw[c] = f.add(cw[c], f.mul(g, basis(j, c)));
        }
        for (std::uint64_t i = r.lo;; ++i) {
            if (i != 0) {
                const auto w = static_cast<std::size_t>(std::count_if(cw.begin(), cw.end(), [](auto v) { return v != 0; }));
                if (w < best) {
                    best = w;
                    if (best <= stop_at) {
                        stop = true;
                        break;
                    }
                }
            }
            if (i + 1 >= r.hi) break;
            if ((i & 0xFFFF) == 0 && stop.load(std::memory_order_relaxed)) break;
            std::uint64_t next = i + 1;
            std::size_t j = 0;
            while (next % p == 0) {
                next /= p;
                ++j;
            }
            const auto row = basis.row(j);
            for (std::size_t c = 0; c < n; ++c) cw[c] = f.add(cw[c], row[c]);
        }
        return best;
    };

    const auto best = run_parallel(split(total, opt.threads), worker);
    DistanceResult res;
    res.distance = *std::min_element(best.begin(), best.end());
    res.codewords = total - 1;
    res.exact = !(opt.stop_at && res.distance <= *opt.stop_at);
    return res;
}

}  // namespace

DistanceResult min_distance(const FpMatrix& generator, const DistanceOptions& options) {
    const FpMatrix basis = row_space_basis(generator);
    const std::size_t k = basis.rows();
    if (k == 0) throw PreconditionError("minimum distance of the zero code is undefined");
    const std::size_t cap = options.cap.value_or(distance_cap());
    const double bits = static_cast<double>(k) * std::log2(static_cast<double>(basis.modulus()));
    if (bits > static_cast<double>(cap) + 1e-9) {
        throw ResourceError("code dimension " + std::to_string(k) + " exceeds the exact enumeration cap (" +
                            std::to_string(cap) + " bits); use the sampling estimator for an upper bound");
    }
    return basis.modulus() == 2 ? binary_distance(basis, options) : prime_distance(basis, options);
}

DistanceResult estimate_distance(const FpMatrix& generator, std::uint64_t samples, std::uint64_t seed) {
    const FpMatrix basis = row_space_basis(generator);
    const std::size_t k = basis.rows();
    if (k == 0) throw PreconditionError("minimum distance of the zero code is undefined");
    std::mt19937_64 rng(seed);
    const std::uint32_t p = basis.modulus();
    DistanceResult res;
    res.exact = false;
    res.distance = static_cast<std::size_t>(-1);
    // Basis rows themselves are codewords.
    for (std::size_t i = 0; i < k; ++i) res.distance = std::min(res.distance, basis.row_weight(i));
    std::vector<std::uint32_t> msg(k);
    for (std::uint64_t s = 0; s < samples; ++s) {
        bool nonzero = false;
        for (auto& m : msg) {
            m = static_cast<std::uint32_t>(rng() % p);
            nonzero |= m != 0;
        }
        if (!nonzero) continue;
        const auto cw = vec_mul(msg, basis);
        const auto w = static_cast<std::size_t>(std::count_if(cw.begin(), cw.end(), [](auto v) { return v != 0; }));
        res.distance = std::min(res.distance, w);
        ++res.codewords;
    }
    return res;
}

}  // namespace grcodes
