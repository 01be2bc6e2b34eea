#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "apn/map.hpp"
#include "apn/spectra.hpp"

namespace apn {

/// Per-component summary: W(b,0) and, when the component is plateaued, its
/// amplitude t (all |W(b,a)| in {0, 2^((n+t)/2)}).
struct ComponentSummary {
    std::int64_t w0 = 0;
    std::optional<unsigned> amplitude;
};

/// Binary Walsh-spectrum profile. Full mode keeps per-component summaries
/// and the extended-spectrum multiset (never the q x q value table); the
/// W(b,0)-only mode fills just w0, balanced counts and N0/N+/N-.
struct WalshProfile {
    unsigned n = 0;
    bool full = false;
    std::vector<ComponentSummary> comps;  // index b, [0] unused
    std::uint32_t bent_count = 0;         // amplitude 0 (n even)
    std::uint32_t balanced_count = 0;     // W(b,0) = 0
    std::uint64_t N0 = 0, Nplus = 0, Nminus = 0;  // n odd
    std::map<std::uint64_t, std::uint64_t> abs_spectrum;  // |W| -> multiplicity
    bool component_wise_plateaued = false;
    bool almost_bent = false;  // n odd
    bool classical = false;    // n even

    std::uint32_t amplitude_count(unsigned t) const {
        std::uint32_t c = 0;
        for (std::size_t b = 1; b < comps.size(); ++b)
            if (comps[b].amplitude && *comps[b].amplitude == t) ++c;
        return c;
    }
};

inline constexpr unsigned kWalshFullCap = 14;  // max n for full spectra
inline constexpr unsigned kWalshZeroCap = 20;  // max n for W(b,0)-only

/// Exact W(b,a) for all a (index = a), via the fast Walsh-Hadamard
/// transform of the +-1 vector of x -> Tr(b f(x)), O(n 2^n). p = 2, b != 0.
std::vector<std::int32_t> component_spectrum(const MapTable& f, Elem b);

/// Full profile; throws when n exceeds the cap. Parseval is checked for
/// every component.
WalshProfile full_profile(const MapTable& f, unsigned cap_n = kWalshFullCap);

/// W(b,0)-only profile (no amplitudes, no extended spectrum).
WalshProfile zero_only_profile(const MapTable& f, unsigned cap_n = kWalshZeroCap);

/// n odd: every component plateaued with amplitude 1.
bool is_almost_bent(const WalshProfile& wp);

/// n even: |W| values are exactly {0, 2^(n/2), 2^((n+2)/2)} with
/// multiplicities (2^n-1)2^(n-2), (2/3)(2^n-1)2^n and (1/3)(2^n-1)2^(n-2).
bool is_classical_spectrum(const WalshProfile& wp);

/// Direct counts of W(b,0) = 0 / +2^((n+1)/2) / -2^((n+1)/2) over b != 0
/// for an almost bent map, asserted against the closed forms
///   N0 = 2^n - 1 + 2^(n-1) - N/2,
///   N+- = N/4 - 2^(n-2) +- 2^((n-3)/2) (omega(0) - 1).
struct AbStatistics {
    std::uint64_t N0 = 0, Nplus = 0, Nminus = 0;
};
AbStatistics ab_statistics(const WalshProfile& wp, const PreimageProfile& pp);
AbStatistics ab_statistics(const MapTable& f);

/// n even: number of amplitude-0 components.
std::uint32_t bent_component_count(const WalshProfile& wp);

/// gcd(2^i - 1, 2^r + 1) and gcd(2^i + 1, 2^r + 1), closed forms.
std::uint64_t gcd_2pow_minus1_2pow_plus1(unsigned i, unsigned r);
std::uint64_t gcd_2pow_plus1_2pow_plus1(unsigned i, unsigned r);

}  // namespace apn
