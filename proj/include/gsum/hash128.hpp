#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace gsum {

/// 128-bit identifier used for block ids, signatures, and message digests.
struct Hash128 {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    friend bool operator==(const Hash128&, const Hash128&) = default;
    friend auto operator<=>(const Hash128&, const Hash128&) = default;
};

// Default key for the keyed hash. Fixed so runs are reproducible; tests may
// pass other keys to check key sensitivity.
inline constexpr std::uint64_t kDefaultHashKey = 0x9e3779b97f4a7c15ULL;

/// MurmurHash3 x64 128-bit variant, keyed by `seed`.
Hash128 hash_bytes(const void* data, std::size_t len, std::uint64_t seed = kDefaultHashKey);

inline Hash128 hash_string(std::string_view s, std::uint64_t seed = kDefaultHashKey) {
    return hash_bytes(s.data(), s.size(), seed);
}

/// Combines an old and a new identifier in that fixed order; not commutative,
/// so successive iterations remain distinguishable.
Hash128 mix(const Hash128& old_id, const Hash128& new_id);

struct Hash128Hasher {
    std::size_t operator()(const Hash128& h) const noexcept {
        return static_cast<std::size_t>(h.lo ^ (h.hi * 0x9e3779b97f4a7c15ULL));
    }
};

}  // namespace gsum
