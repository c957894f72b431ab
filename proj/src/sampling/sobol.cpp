#include "sampling/sobol.hpp"

#include "common/error.hpp"
#include "common/rng.hpp"
#include "sampling/sobol_table.hpp"

namespace svpkg {

namespace {
constexpr int kBits = 32;
constexpr double kScale = 0x1.0p-32;
} // namespace

int SobolSequence::max_dimension() { return detail::kSobolMaxDimension; }

SobolSequence::SobolSequence(int dimension, std::uint64_t seed)
    : dimension_(dimension) {
    require(dimension >= 1 && dimension <= detail::kSobolMaxDimension,
            ErrorCode::DimensionUnsupported,
            "sobol dimension must be in [1, " +
                std::to_string(detail::kSobolMaxDimension) + "], got " +
                std::to_string(dimension));

    directions_.assign(static_cast<std::size_t>(dimension) * kBits, 0);

    // Dimension 1: van der Corput, v_k = 2^(32-k).
    for (int k = 0; k < kBits; ++k)
        directions_[static_cast<std::size_t>(k)] = 1u << (kBits - 1 - k);

    for (int dim = 2; dim <= dimension; ++dim) {
        const auto& info = detail::kSobolDims[dim - 2];
        const int deg = info.degree;
        std::uint32_t* v = &directions_[static_cast<std::size_t>(dim - 1) * kBits];
        for (int k = 0; k < deg; ++k)
            v[k] = detail::kSobolMInit[info.m_offset + k] << (kBits - 1 - k);
        for (int k = deg; k < kBits; ++k) {
            std::uint32_t value = v[k - deg] ^ (v[k - deg] >> deg);
            for (int i = 1; i < deg; ++i)
                if ((info.poly >> (i - 1)) & 1u) value ^= v[k - i];
            v[k] = value;
        }
    }

    shift_.assign(static_cast<std::size_t>(dimension), 0);
    if (seed != 0) {
        // Linear matrix scrambling plus a digital shift (Matousek-style).
        // The matrix scramble breaks the deterministic pair-reversal
        // structure of the raw sequence (consecutive points differ by a
        // leading-bit flip in every coordinate) that would otherwise leak
        // into downstream statistics; the digital shift places the net
        // uniformly. Seed 0 keeps the identity scramble and zero shift.
        for (int j = 0; j < dimension; ++j) {
            Rng rng = Rng::substream(seed, 0x536f626f6cull, static_cast<std::uint64_t>(j));
            // random lower-triangular bit matrix with unit diagonal; row r
            // holds random bits strictly above position r (MSB-first)
            std::uint32_t rows[kBits];
            for (int r = 0; r < kBits; ++r) {
                std::uint32_t random_bits =
                    r == 0 ? 0
                           : static_cast<std::uint32_t>(rng.next_u64() >> 32) &
                                 ~(0xffffffffu >> r);
                rows[r] = random_bits | (1u << (kBits - 1 - r));
            }
            std::uint32_t* v = &directions_[static_cast<std::size_t>(j) * kBits];
            for (int k = 0; k < kBits; ++k) {
                std::uint32_t scrambled = 0;
                for (int r = 0; r < kBits; ++r)
                    scrambled |= static_cast<std::uint32_t>(
                                     __builtin_popcount(rows[r] & v[k]) & 1)
                                 << (kBits - 1 - r);
                v[k] = scrambled;
            }
            shift_[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(
                mix64(mix64(seed, 0x7368696674ull), static_cast<std::uint64_t>(j)) >> 32);
        }
    }
}

Eigen::VectorXd SobolSequence::point(std::uint64_t index) const {
    require(index >= 1, ErrorCode::InvalidArgument, "sobol index starts at 1");
    // Direct evaluation: XOR the direction numbers selected by the Gray code
    // of the index, so any point is computable without sequential state.
    std::uint64_t gray = index ^ (index >> 1);
    Eigen::VectorXd out(dimension_);
    for (int j = 0; j < dimension_; ++j) {
        const std::uint32_t* v = &directions_[static_cast<std::size_t>(j) * kBits];
        std::uint32_t acc = shift_[static_cast<std::size_t>(j)];
        std::uint64_t bits = gray;
        int k = 0;
        while (bits) {
            if (bits & 1ull) acc ^= v[k];
            bits >>= 1;
            ++k;
        }
        out[j] = static_cast<double>(acc) * kScale;
    }
    return out;
}

std::vector<Eigen::VectorXd> SobolSequence::points(int count) const {
    std::vector<Eigen::VectorXd> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i)
        out.push_back(point(static_cast<std::uint64_t>(i)));
    return out;
}

std::vector<Eigen::VectorXd> sobol_points(int dimension, int count, std::uint64_t seed) {
    require(count >= 1, ErrorCode::InvalidArgument, "count must be >= 1");
    return SobolSequence(dimension, seed).points(count);
}

std::vector<Eigen::VectorXd> pseudo_random_points(int dimension, int count, std::uint64_t seed) {
    require(count >= 1, ErrorCode::InvalidArgument, "count must be >= 1");
    std::vector<Eigen::VectorXd> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Rng rng = Rng::substream(seed, 0x63756265ull, static_cast<std::uint64_t>(i));
        Eigen::VectorXd p(dimension);
        for (int j = 0; j < dimension; ++j) p[j] = rng.uniform();
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace svpkg
