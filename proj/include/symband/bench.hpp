#pragma once

// Seeded test systems, wall-clock timing, and order-of-growth estimation.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "symband/band.hpp"
#include "symband/solver.hpp"

namespace symband {

/// splitmix64 stream. Integer ranges use modulo reduction; the bias
/// (at most 2^-60 relative for the tiny ranges used here) is accepted.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi].
    long range(long lo, long hi) noexcept {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

private:
    std::uint64_t state_;
};

struct GenSpec {
    std::size_t n = 0;
    int w = 1;
    std::uint64_t seed = 0;
    Backend backend = Backend::Exact;
    StorageKind storage = StorageKind::Fixed;
    std::vector<std::size_t> zero_pivot_positions;  // 1-based rows
};

struct Generated {
    AnySystem system;
    std::vector<Rational> planted;
    std::uint64_t seed_used = 0;  // differs from the requested seed after retries
};

inline constexpr int kMaxGenerationRetries = 8;
inline constexpr std::size_t kVerifyLimit = 1000;

/// A = L·U from bounded integer bands, planted solution x*, rhs = A·x*.
/// Requested zero pivots are forced by adjusting a(i,i); nonsingularity is
/// verified for n <= 1000, retrying with seed + 1 up to 8 times.
Generated generate_system(const GenSpec& spec);

/// Convenience wrapper for the exact backend.
ExactSystem generate_exact(std::size_t n, int w, std::uint64_t seed, StorageKind storage = StorageKind::Fixed,
                           std::vector<Rational>* planted = nullptr);

/// Band system with every band entry nonzero (|a(i,j)| in 1..999) and a
/// planted integer solution. Used where elimination must not skip any
/// multiplier; the wide range makes accidental cancellation to zero rare.
ExactSystem generate_dense_band(std::size_t n, int w, std::uint64_t seed, std::vector<Rational>* planted = nullptr);

struct BenchRecord {
    Algorithm algorithm = Algorithm::STDM;
    StorageKind storage = StorageKind::Fixed;
    Backend backend = Backend::Exact;
    std::size_t n = 0;
    int rep = 0;
    double seconds = 0.0;
};

/// Times `reps` full solves with a monotonic clock. Each solve is checked
/// against the planted solution before its record is kept.
std::vector<BenchRecord> time_run(Algorithm algorithm, const AnySystem& sys, const std::vector<Rational>& planted,
                                  int reps);

struct AlphaEstimate {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    double t1 = 0.0;
    double t2 = 0.0;
    double alpha = 0.0;
    double k_fit = 0.0;
};

/// alpha = (log t2 - log t1) / (log n2 - log n1); k_fit = t1 / n1^alpha.
/// Pairs are ordered so that n1 < n2. Throws DomainError.
AlphaEstimate estimate_alpha(double t1, double t2, double n1, double n2);

struct RatioRow {
    StorageKind storage = StorageKind::Fixed;
    Backend backend = Backend::Exact;
    std::size_t n = 0;
    double hd_td = 0.0;  // mean(SHDM) / mean(STDM)
    double pd_td = 0.0;  // mean(SPDM) / mean(STDM)
};

/// Throws MissingSeries unless every (storage, backend, n) group has all three methods.
std::vector<RatioRow> ratio_table(const std::vector<BenchRecord>& records);

struct MeanRow {
    Algorithm algorithm = Algorithm::STDM;
    StorageKind storage = StorageKind::Fixed;
    Backend backend = Backend::Exact;
    std::size_t n = 0;
    int reps = 0;
    double mean = 0.0;
    double median = 0.0;
};

/// Sorted by (storage, backend, algorithm, n).
std::vector<MeanRow> mean_table(const std::vector<BenchRecord>& records);

double mean(const std::vector<double>& v);
double median(std::vector<double> v);

inline constexpr const char* kCsvHeader = "algorithm,storage,backend,n,rep,seconds";

void write_csv_header(std::ostream& os);
void write_csv_record(std::ostream& os, const BenchRecord& r);
/// Throws ParseError on a malformed header or row.
std::vector<BenchRecord> read_csv(std::istream& is);

}  // namespace symband
