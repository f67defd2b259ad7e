#pragma once

#include <cstdint>
#include <optional>

#include "grcodes/matrix.hpp"

namespace grcodes {

/// Default enumeration cap on the code dimension (binary case).
inline constexpr std::size_t kDefaultDistanceCap = 36;

/// The enumeration cap: GRCODES_DISTANCE_CAP if set, else 36. For GF(p) the
/// cap bounds k * log2(p).
std::size_t distance_cap();

struct DistanceOptions {
    std::size_t threads = 1;
    /// Overrides distance_cap() when set.
    std::optional<std::size_t> cap;
    /// Stop as soon as a nonzero codeword of weight <= stop_at is seen; the
    /// result is then only guaranteed to be <= stop_at.
    std::optional<std::size_t> stop_at;
};

struct DistanceResult {
    std::size_t distance = 0;
    /// False for sampled upper bounds and early-stopped searches.
    bool exact = true;
    std::uint64_t codewords = 0;
};

/// Exact minimum Hamming weight over the nonzero codewords spanned by the
/// rows of `generator`. Messages are walked in Gray-code order so each step
/// adds a single generator row; ranges are split across threads and the
/// result is independent of the thread count. Throws ResourceError above
/// the cap and PreconditionError for the zero code.
DistanceResult min_distance(const FpMatrix& generator, const DistanceOptions& options = {});

/// Upper bound on the minimum distance from `samples` random messages.
DistanceResult estimate_distance(const FpMatrix& generator, std::uint64_t samples, std::uint64_t seed);

}  // namespace grcodes
