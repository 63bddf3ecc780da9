#pragma once

// Exact arithmetic carrier types. All computation in this library is over
// the rationals; no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gn2 {

using Int = mpz_class;
using Rat = mpq_class;

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using IVec = std::vector<Int>;

/// Base class for all hard contract violations in the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidProjective : Error {
    InvalidProjective() : Error("projective pair (0,0) is not a point of CP^1") {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};
struct OutOfHypersimplex : Error {
    OutOfHypersimplex() : Error("point lies outside the hypersimplex") {}
};

inline std::string to_string(const Rat& q) { return q.get_str(); }

/// Parses "p/q" or "p". Throws Error on malformed input or zero denominator.
inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw Error("cannot parse rational: " + s);
    if (q.get_den() == 0) throw Error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

/// Deterministic 64-bit generator (splitmix64). Used for all seeded
/// sampling so that output is reproducible across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi] (inclusive). Range is tiny here, so
    /// modulo bias is irrelevant; determinism is what matters.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

}  // namespace gn2
