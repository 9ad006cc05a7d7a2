#pragma once

#include <cstddef>
#include <cstdint>

namespace ca {

// Default enumeration caps. Every cap is a plain defaulted parameter on the
// operation it guards, so callers (and the CLI via CA_ALGEBRA_MAX_ENUM) can
// raise or lower them explicitly.

inline constexpr std::uint64_t kMaxConfigurations = std::uint64_t{1} << 24;  // q^n
inline constexpr std::uint64_t kMaxRuleSpace = std::uint64_t{1} << 20;       // q^(q^n)
inline constexpr std::size_t kMaxClosure = std::size_t{1} << 21;
inline constexpr int kMaxLatticeOrder = 64;       // subgroup enumeration
inline constexpr int kMaxRankOrder = 24;          // group_rank search
inline constexpr int kMaxCentralizerOrbit = 10;   // factorial scan on one orbit
inline constexpr unsigned long kMaxWreathAlpha = 1ul << 20;  // alpha! guard
inline constexpr std::uint64_t kMaxOrderExponent = std::uint64_t{1} << 26;  // ca_order
inline constexpr std::uint64_t kMaxRepSearch = std::uint64_t{1} << 16;  // orbit reps

}  // namespace ca
