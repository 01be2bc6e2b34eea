#include "apn/walsh.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace apn {
namespace {

void require_binary(const Field& F) {
    if (F.p() != 2) throw std::invalid_argument("walsh: p must be 2");
}

// Absolute trace as a bit mask: Tr(y) = parity(y & mask).
std::uint32_t trace_mask(const Field& F) {
    std::uint32_t mask = 0;
    for (unsigned i = 0; i < F.n(); ++i)
        mask |= F.trace_relative(Elem(1) << i, 1) << i;
    return mask;
}

inline int parity(std::uint32_t v) { return std::popcount(v) & 1; }

void fwht(std::vector<std::int32_t>& v) {
    for (std::size_t len = 1; len < v.size(); len <<= 1)
        for (std::size_t i = 0; i < v.size(); i += len << 1)
            for (std::size_t j = i; j < i + len; ++j) {
                const std::int32_t u = v[j], w = v[j + len];
                v[j] = u + w;
                v[j + len] = u - w;
            }
}

// Signs of x -> Tr(b f(x)).
std::vector<std::int32_t> sign_vector(const MapTable& f, Elem b, std::uint32_t tmask) {
    const Field& F = *f.field;
    std::vector<std::int32_t> v(F.q());
    for (Elem x = 0; x < F.q(); ++x)
        v[x] = parity(F.mul(b, f.table[x]) & tmask) ? -1 : 1;
    return v;
}

// The FWHT indexes characters by bit masks; Tr(a x) corresponds to the mask
// mu(a) with bit i = Tr(a e_i).
std::vector<std::uint32_t> dual_index(const Field& F, std::uint32_t tmask) {
    std::vector<std::uint32_t> mu(F.q());
    for (Elem a = 0; a < F.q(); ++a) {
        std::uint32_t m = 0;
        for (unsigned i = 0; i < F.n(); ++i)
            m |= std::uint32_t(parity(F.mul(a, Elem(1) << i) & tmask)) << i;
        mu[a] = m;
    }
    return mu;
}

std::optional<unsigned> detect_amplitude(const std::vector<std::int32_t>& w, unsigned n) {
    std::int64_t vmax = 0;
    for (std::int32_t x : w) vmax = std::max<std::int64_t>(vmax, std::abs(x));
    if (vmax == 0 || !std::has_single_bit(std::uint64_t(vmax))) return std::nullopt;
    for (std::int32_t x : w)
        if (x != 0 && std::abs(std::int64_t(x)) != vmax) return std::nullopt;
    const unsigned s = std::bit_width(std::uint64_t(vmax)) - 1;
    if (2 * s < n) throw std::logic_error("walsh: amplitude below Parseval floor");
    return 2 * s - n;
}

}  // namespace

std::vector<std::int32_t> component_spectrum(const MapTable& f, Elem b) {
    const Field& F = *f.field;
    require_binary(F);
    if (b == 0) throw std::invalid_argument("component_spectrum: b must be nonzero");
    const std::uint32_t tmask = trace_mask(F);
    std::vector<std::int32_t> v = sign_vector(f, b, tmask);
    fwht(v);
    const auto mu = dual_index(F, tmask);
    std::vector<std::int32_t> w(F.q());
    for (Elem a = 0; a < F.q(); ++a) w[a] = v[mu[a]];
    return w;
}

WalshProfile full_profile(const MapTable& f, unsigned cap_n) {
    const Field& F = *f.field;
    require_binary(F);
    if (F.n() > cap_n)
        throw std::runtime_error("walsh: n exceeds the full-spectrum cap");

    const Elem q = F.q();
    const unsigned n = F.n();
    const std::uint32_t tmask = trace_mask(F);

    WalshProfile wp;
    wp.n = n;
    wp.full = true;
    wp.comps.resize(q);
    wp.component_wise_plateaued = true;

    const std::uint64_t parseval = std::uint64_t(q) * q;
    std::vector<std::uint64_t> abs_hist(std::size_t(q) + 1, 0);  // |W| <= q
    for (Elem b = 1; b < q; ++b) {
        std::vector<std::int32_t> v = sign_vector(f, b, tmask);
        fwht(v);
        std::uint64_t power = 0;
        for (std::int32_t x : v) {
            power += std::uint64_t(std::int64_t(x) * x);
            ++abs_hist[std::uint64_t(x < 0 ? -x : x)];
        }
        if (power != parseval)
            throw std::logic_error("walsh: Parseval violated");
        ComponentSummary cs;
        cs.w0 = v[0];  // mu(0) = 0
        cs.amplitude = detect_amplitude(v, n);
        if (!cs.amplitude) wp.component_wise_plateaued = false;
        if (cs.amplitude && *cs.amplitude == 0) ++wp.bent_count;
        if (cs.w0 == 0) ++wp.balanced_count;
        wp.comps[b] = cs;
    }
    for (std::uint64_t v = 0; v <= q; ++v)
        if (abs_hist[v]) wp.abs_spectrum[v] = abs_hist[v];

    if (n % 2 == 1) {
        const std::int64_t peak = std::int64_t(1) << ((n + 1) / 2);
        for (Elem b = 1; b < q; ++b) {
            if (wp.comps[b].w0 == 0) ++wp.N0;
            else if (wp.comps[b].w0 == peak) ++wp.Nplus;
            else if (wp.comps[b].w0 == -peak) ++wp.Nminus;
        }
        wp.almost_bent = wp.component_wise_plateaued;
        for (Elem b = 1; b < q && wp.almost_bent; ++b)
            if (*wp.comps[b].amplitude != 1) wp.almost_bent = false;
    } else {
        wp.classical = is_classical_spectrum(wp);
    }
    return wp;
}

WalshProfile zero_only_profile(const MapTable& f, unsigned cap_n) {
    const Field& F = *f.field;
    require_binary(F);
    if (F.n() > cap_n)
        throw std::runtime_error("walsh: n exceeds the W(b,0) cap");

    const Elem q = F.q();
    const std::uint32_t tmask = trace_mask(F);
    WalshProfile wp;
    wp.n = F.n();
    wp.comps.resize(q);
    for (Elem b = 1; b < q; ++b) {
        std::int64_t s = 0;
        for (Elem x = 0; x < q; ++x)
            s += parity(F.mul(b, f.table[x]) & tmask) ? -1 : 1;
        wp.comps[b].w0 = s;
        if (s == 0) ++wp.balanced_count;
    }
    if (wp.n % 2 == 1) {
        const std::int64_t peak = std::int64_t(1) << ((wp.n + 1) / 2);
        for (Elem b = 1; b < q; ++b) {
            if (wp.comps[b].w0 == 0) ++wp.N0;
            else if (wp.comps[b].w0 == peak) ++wp.Nplus;
            else if (wp.comps[b].w0 == -peak) ++wp.Nminus;
        }
    }
    return wp;
}

bool is_almost_bent(const WalshProfile& wp) {
    if (wp.n % 2 != 1) throw std::invalid_argument("is_almost_bent: n must be odd");
    if (!wp.full) throw std::invalid_argument("is_almost_bent: full profile required");
    for (std::size_t b = 1; b < wp.comps.size(); ++b)
        if (!wp.comps[b].amplitude || *wp.comps[b].amplitude != 1) return false;
    return true;
}

bool is_classical_spectrum(const WalshProfile& wp) {
    if (wp.n % 2 != 0) throw std::invalid_argument("is_classical_spectrum: n must be even");
    if (!wp.full) throw std::invalid_argument("is_classical_spectrum: full profile required");
    const unsigned n = wp.n;
    const std::uint64_t qm1 = (std::uint64_t(1) << n) - 1;
    const std::uint64_t lo = std::uint64_t(1) << (n / 2);
    const std::uint64_t hi = std::uint64_t(1) << ((n + 2) / 2);
    const std::uint64_t m0 = qm1 << (n - 2);
    const std::uint64_t mlo = 2 * qm1 * (std::uint64_t(1) << n) / 3;
    const std::uint64_t mhi = qm1 * (std::uint64_t(1) << (n - 2)) / 3;
    if (m0 + mlo + mhi != qm1 << n)
        throw std::logic_error("walsh: classical multiplicities do not sum to (2^n-1)2^n");

    for (const auto& [v, c] : wp.abs_spectrum)
        if (v != 0 && v != lo && v != hi) return false;
    auto count = [&](std::uint64_t v) {
        auto it = wp.abs_spectrum.find(v);
        return it == wp.abs_spectrum.end() ? std::uint64_t(0) : it->second;
    };
    return count(0) == m0 && count(lo) == mlo && count(hi) == mhi;
}

AbStatistics ab_statistics(const WalshProfile& wp, const PreimageProfile& pp) {
    const unsigned n = wp.n;
    if (n % 2 != 1) throw std::invalid_argument("ab_statistics: n must be odd");
    if (n < 3) throw std::invalid_argument("ab_statistics: n must be at least 3");
    if (!is_almost_bent(wp)) throw std::invalid_argument("ab_statistics: map is not almost bent");

    AbStatistics st{wp.N0, wp.Nplus, wp.Nminus};

    const std::uint64_t q = std::uint64_t(1) << n;
    const std::uint64_t N = pp.N;
    if (N % 4 != 0) throw std::logic_error("ab_statistics: N not divisible by 4");
    const std::int64_t shift =
        (std::int64_t(1) << ((n - 3) / 2)) * (std::int64_t(pp.omega[0]) - 1);
    const std::int64_t n0 = std::int64_t(q) - 1 + std::int64_t(q / 2) - std::int64_t(N / 2);
    const std::int64_t np = std::int64_t(N / 4) - std::int64_t(q / 4) + shift;
    const std::int64_t nm = std::int64_t(N / 4) - std::int64_t(q / 4) - shift;
    if (n0 != std::int64_t(st.N0) || np != std::int64_t(st.Nplus) ||
        nm != std::int64_t(st.Nminus))
        throw std::logic_error("ab_statistics: closed forms disagree with direct counts");
    return st;
}

AbStatistics ab_statistics(const MapTable& f) {
    const WalshProfile wp = full_profile(f);
    const PreimageProfile pp = preimage_profile(f);
    return ab_statistics(wp, pp);
}

std::uint32_t bent_component_count(const WalshProfile& wp) {
    if (wp.n % 2 != 0)
        throw std::invalid_argument("bent_component_count: n must be even");
    if (!wp.full)
        throw std::invalid_argument("bent_component_count: full profile required");
    return wp.bent_count;
}

std::uint64_t gcd_2pow_minus1_2pow_plus1(unsigned i, unsigned r) {
    const unsigned g = std::gcd(i, r);
    return (i / g) % 2 == 0 ? (std::uint64_t(1) << g) + 1 : 1;
}

std::uint64_t gcd_2pow_plus1_2pow_plus1(unsigned i, unsigned r) {
    const unsigned g = std::gcd(i, r);
    return ((i / g) % 2 == 1 && (r / g) % 2 == 1) ? (std::uint64_t(1) << g) + 1 : 1;
}

}  // namespace apn
