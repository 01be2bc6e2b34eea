#include "apn/theorems.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace apn {
namespace {

std::uint64_t isqrt_floor(std::uint64_t v) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::uint64_t isqrt_ceil(std::uint64_t v) {
    const std::uint64_t f = isqrt_floor(v);
    return f * f == v ? f : f + 1;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

// Divisors of v, ascending, excluding 1.
std::vector<std::uint32_t> divisors_above_1(std::uint32_t v) {
    std::vector<std::uint32_t> ds;
    for (std::uint32_t d = 2; d <= v; ++d)
        if (v % d == 0) ds.push_back(d);
    return ds;
}

TheoremReport not_applicable(std::string id, std::string why) {
    TheoremReport r;
    r.id = std::move(id);
    r.note = std::move(why);
    return r;
}

}  // namespace

MapAnalysis analyze_map(MapTable f, WalshMode mode, unsigned walsh_full_cap,
                        unsigned walsh_zero_cap) {
    MapAnalysis an{std::move(f), {}, {}, {}, std::nullopt};
    an.pp = preimage_profile(an.f);
    an.dp = differential_profile(an.f);
    an.pr = interpolate(an.f);
    check_profile_consistency(an.f, an.pp, an.dp);
    if (an.f.field->p() == 2 && mode != WalshMode::Skip) {
        if (mode == WalshMode::Full && an.f.field->n() <= walsh_full_cap)
            an.wp = full_profile(an.f, walsh_full_cap);
        else if (an.f.field->n() <= walsh_zero_cap)
            an.wp = zero_only_profile(an.f, walsh_zero_cap);
    }
    return an;
}

TheoremReport check_lower_bound(const MapAnalysis& an) {
    TheoremReport r;
    r.id = "lb.duniform";
    r.applicable = r.hypotheses_hold = true;

    const std::uint64_t q = an.pp.q;
    const std::uint32_t d = an.dp.d;
    const std::uint64_t bound = ceil_div(q, d + 1);
    bool ok = an.pp.image_size >= bound;
    r.witnesses["q"] = q;
    r.witnesses["d"] = d;
    r.witnesses["bound"] = bound;
    r.witnesses["image_size"] = an.pp.image_size;

    if (const auto ex = exceptional_set(an.pp, d);
        ex && an.pp.image_size == bound) {
        // minimal image: (q+eps)/(d+1); check the square-sum inequality and
        // the exceptional-set identity
        std::uint64_t sq = 0, dsum = 0;
        for (Elem y = 0; y < an.pp.q; ++y) {
            const std::int64_t w = an.pp.omega[y];
            if (w == 0) continue;
            const std::int64_t dev = w - std::int64_t(d + 1);
            sq += std::uint64_t(dev * dev);
        }
        for (Elem y : ex->D) dsum += an.pp.omega[y];
        const std::uint64_t rhs = std::uint64_t(d + 1) * (ex->eps - 1) + 1;
        const std::uint64_t id_rhs = std::uint64_t(ex->D.size()) * (d + 1) - ex->eps;
        ok = ok && sq <= rhs && dsum == id_rhs;
        r.witnesses["epsilon"] = ex->eps;
        r.witnesses["square_sum"] = sq;
        r.witnesses["square_sum_bound"] = rhs;
        r.witnesses["D_size"] = ex->D.size();
        if (ex->D.size() <= 32) r.witnesses["D"] = ex->D;
        r.witnesses["D_omega_sum"] = dsum;
    }
    r.conclusion_holds = ok;
    return r;
}

TheoremReport check_mr_inequalities(const MapAnalysis& an) {
    TheoremReport r;
    r.id = "ineq.mr";
    r.applicable = r.hypotheses_hold = true;

    const std::uint64_t q = an.pp.q;
    const std::uint32_t d = an.dp.d;
    const std::uint64_t N = an.pp.N;
    std::uint64_t s1 = 0, s2 = 0;
    std::uint32_t max_r = 0;
    for (const auto& [rr, m] : an.pp.M) {
        max_r = std::max(max_r, rr);
        const std::uint64_t rm = std::uint64_t(rr) * m;  // r*M_r <= q
        if (rr <= d) s1 += rm * (d + 1 - rr);
        if (rr <= d + 1) s2 += rm * (d + 2 - rr);
    }
    const std::uint64_t zdb_N = std::uint64_t(d + 1) * q - d;

    const bool c1 = s1 >= d;
    const bool c2 = s2 >= q + d;
    const bool eq1_chr = (s1 == d) == (N == zdb_N && max_r <= d + 1);
    const bool eq2_cond = N == zdb_N && max_r <= d + 2;
    const bool eq2_chr = (s2 == q + d) == eq2_cond;
    bool reduction = true;
    if (s2 == q + d)
        reduction = s1 == std::uint64_t(d + 2) * an.pp.M_at(d + 2) + d;

    r.witnesses["d"] = d;
    r.witnesses["sum1"] = s1;
    r.witnesses["sum1_bound"] = d;
    r.witnesses["sum2"] = s2;
    r.witnesses["sum2_bound"] = q + d;
    r.witnesses["clause_sum1"] = c1;
    r.witnesses["clause_sum2"] = c2;
    r.witnesses["clause_equality1"] = eq1_chr;
    r.witnesses["clause_equality2"] = eq2_chr;
    r.witnesses["clause_reduction"] = reduction;
    r.conclusion_holds = c1 && c2 && eq1_chr && eq2_chr && reduction;
    return r;
}

TheoremReport check_apn_lower_bound_cases(const MapAnalysis& an) {
    const char* id = "lb.apn-cases";
    const Field& F = *an.f.field;
    if (F.p() != 2) return not_applicable(id, "p != 2");
    if (an.dp.d != 2) return not_applicable(id, "map is not APN");
    const unsigned n = F.n();
    const std::uint64_t bound = (an.pp.q + (n % 2 ? 1 : 2)) / 3;
    if (an.pp.image_size != bound)
        return not_applicable(id, "image size above the minimum");

    TheoremReport r;
    r.id = id;
    r.applicable = r.hypotheses_hold = true;
    const auto& M = an.pp.M;
    const std::uint32_t img = an.pp.image_size;
    auto pattern = [&](std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> want) {
        std::size_t nonzero = 0;
        for (const auto& [rr, cnt] : want)
            if (cnt) ++nonzero;
        if (M.size() != nonzero) return false;
        for (const auto& [rr, cnt] : want)
            if (an.pp.M_at(rr) != cnt) return false;
        return true;
    };

    int matched = 0;
    if (n % 2 == 1) {
        if (pattern({{2u, 1u}, {3u, img - 1}})) matched = 1;
        r.witnesses["case"] = matched == 1 ? "odd-unique" : "none";
        r.conclusion_holds = matched == 1;
    } else {
        if (pattern({{1u, 1u}, {3u, img - 1}})) matched = 1;
        else if (pattern({{2u, 2u}, {3u, img - 2}})) matched = 2;
        else if (pattern({{2u, 3u}, {4u, 1u}, {3u, img - 4}})) matched = 3;
        r.witnesses["case"] = matched;
        r.conclusion_holds = matched != 0;
    }
    return r;
}

TheoremReport check_sufficient_3to1(const MapAnalysis& an) {
    const char* id = "apn.sufficient-3to1";
    const Field& F = *an.f.field;
    if (F.p() != 2 || F.n() % 2 != 0) return not_applicable(id, "needs p = 2 and n even");
    if (an.dp.d != 2) return not_applicable(id, "map is not APN");
    if (an.f.table[0] != 0) return not_applicable(id, "f(0) != 0");
    for (Elem y = 1; y < an.pp.q; ++y)
        if (an.pp.omega[y] != 0 && an.pp.omega[y] < 3)
            return not_applicable(id, "a nonzero image element has fewer than 3 preimages");

    TheoremReport r;
    r.id = id;
    r.applicable = r.hypotheses_hold = true;
    r.conclusion_holds = is_almost_k_to_1(an.pp, 3);
    r.witnesses["image_size"] = an.pp.image_size;
    return r;
}

TheoremReport check_do_equivalence(const MapAnalysis& an) {
    const char* id = "do.equiv";
    const Field& F = *an.f.field;
    if (!is_dembowski_ostrom(an.pr)) return not_applicable(id, "not a DO polynomial");

    std::vector<std::uint32_t> ks;
    for (std::uint32_t k : divisors_above_1(F.q() - 1))
        if (is_k_divisible(an.f, k)) ks.push_back(k);
    if (ks.empty()) return not_applicable(id, "not k-divisible for any divisor k >= 2 of q-1");

    TheoremReport r;
    r.id = id;
    r.applicable = r.hypotheses_hold = true;
    bool ok = true;
    r.witnesses["k_checked"] = ks;
    for (std::uint32_t k : ks) {
        const std::uint32_t d = k - 1;
        const bool uniform_d = an.dp.d == d;
        const bool almost = is_almost_k_to_1(an.pp, k);
        if (uniform_d != almost) ok = false;
        if (almost) {
            // lemma clauses for the almost-(d+1)-to-1 case
            bool zdb = is_zero_difference_balanced(an.dp, d);
            bool linear_sets = true;
            for (Elem a = 1; a < F.q() && linear_sets; ++a) {
                const auto ds = differential_set(an.f, a);
                if (subspace_type(F, ds.elems) != SubspaceType::Linear)
                    linear_sets = false;
            }
            std::uint32_t dd = d;
            while (dd > 1 && dd % F.p() == 0) dd /= F.p();
            const bool d_prime_power = dd == 1;
            if (!(zdb && linear_sets && d_prime_power)) ok = false;
            r.witnesses["k_" + std::to_string(k)] = {
                {"zero_difference_balanced", zdb},
                {"differential_sets_linear", linear_sets},
                {"d_is_p_power", d_prime_power}};
        }
    }
    r.witnesses["d"] = an.dp.d;
    r.conclusion_holds = ok;
    return r;
}

TheoremReport check_subfield_permutation(const MapAnalysis& an) {
    const char* id = "subfield.perm";
    const Field& F = *an.f.field;
    if (F.p() != 2) return not_applicable(id, "p != 2");
    unsigned m = F.n();
    unsigned two_part = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++two_part;
    }
    if (two_part < 1 || m < 3) return not_applicable(id, "n is not 2^i * m with m >= 3 odd");
    if (an.dp.d != 2) return not_applicable(id, "map is not APN");
    if (!is_dembowski_ostrom(an.pr)) return not_applicable(id, "not a DO polynomial");
    if (!is_k_divisible(an.f, 3)) return not_applicable(id, "not 3-divisible");
    for (const auto& [e, c] : an.pr.coeffs)
        if (F.frobenius(c, m) != c)
            return not_applicable(id, "coefficients do not lie in the subfield");

    TheoremReport r;
    r.id = id;
    r.applicable = r.hypotheses_hold = true;
    const auto sub = F.subfield_elements(m);
    bool closed = true, injective = true, apn_on_sub = true;
    std::vector<char> seen(F.q(), 0);
    for (Elem x : sub) {
        const Elem y = an.f.table[x];
        if (F.frobenius(y, m) != y) closed = false;
        if (seen[y]) injective = false;
        seen[y] = 1;
    }
    std::vector<std::uint32_t> hist(F.q(), 0);
    for (Elem a : sub) {
        if (a == 0) continue;
        for (Elem x : sub) ++hist[F.sub(an.f.table[F.add(x, a)], an.f.table[x])];
        for (Elem x : sub) {
            const Elem b = F.sub(an.f.table[F.add(x, a)], an.f.table[x]);
            if (hist[b] > 2) apn_on_sub = false;
            hist[b] = 0;
        }
        if (!apn_on_sub) break;
    }
    r.witnesses["m"] = m;
    r.witnesses["closed"] = closed;
    r.witnesses["bijective_on_subfield"] = injective;
    r.witnesses["apn_on_subfield"] = apn_on_sub;
    r.conclusion_holds = closed && injective && apn_on_sub;
    return r;
}

TheoremReport check_ab_properties(const MapAnalysis& an) {
    const char* id = "ab.lemma-stats";
    const Field& F = *an.f.field;
    if (F.p() != 2 || F.n() % 2 != 1 || F.n() < 3)
        return not_applicable(id, "needs p = 2 and odd n >= 3");
    if (!an.wp || !an.wp->full) return not_applicable(id, "full Walsh profile unavailable");
    if (!is_almost_bent(*an.wp)) return not_applicable(id, "map is not almost bent");

    TheoremReport r;
    r.id = id;
    r.applicable = r.hypotheses_hold = true;
    const std::uint64_t q = an.pp.q;
    const std::uint64_t N = an.pp.N;

    const bool div4 = N % 4 == 0;
    const bool balanced_odd = an.wp->balanced_count % 2 == 1;
    const bool n_bound = N <= 3 * q - 4 && !is_zero_difference_balanced(an.dp, 2);
    const bool img_bound = std::uint64_t(an.pp.image_size) * 3 > q + 1;
    bool stats_ok = true;
    try {
        const auto st = ab_statistics(*an.wp, an.pp);
        r.witnesses["N0"] = st.N0;
        r.witnesses["Nplus"] = st.Nplus;
        r.witnesses["Nminus"] = st.Nminus;
    } catch (const std::logic_error&) {
        stats_ok = false;
    }
    r.witnesses["N"] = N;
    r.witnesses["balanced_count"] = an.wp->balanced_count;
    r.witnesses["clause_div4"] = div4;
    r.witnesses["clause_balanced_odd"] = balanced_odd;
    r.witnesses["clause_N_bound"] = n_bound;
    r.witnesses["clause_image_bound"] = img_bound;
    r.witnesses["clause_lemma_stats"] = stats_ok;
    r.conclusion_holds = div4 && balanced_odd && n_bound && img_bound && stats_ok;
    return r;
}

TheoremReport check_k_to_1_spectrum(const MapAnalysis& an) {
    const char* id = "walsh.k-to-1";
    const Field& F = *an.f.field;
    if (F.p() != 2 || F.n() % 2 != 0) return not_applicable(id, "needs p = 2 and n even");
    const auto kopt = almost_k_to_1_value(an.pp);
    if (!kopt) return not_applicable(id, "not almost-k-to-1");
    const std::uint32_t k = *kopt;
    if (k < 3 || !std::has_single_bit(k - 1))
        return not_applicable(id, "k - 1 is not a power of 2");
    const unsigned rr = std::bit_width(std::uint32_t(k - 1)) - 1;
    const unsigned n = F.n();
    if (n % (2 * rr) != 0) return not_applicable(id, "n is not a multiple of 2r");
    const unsigned m = n / (2 * rr);
    if (!an.wp || !an.wp->full) return not_applicable(id, "full Walsh profile unavailable");

    TheoremReport r;
    r.id = id;
    r.applicable = true;
    r.witnesses["r"] = rr;
    r.witnesses["m"] = m;

    // Normalize so f(0) = 0 and 0 is the unique 1-preimage element; the
    // extended spectrum is invariant under x -> f(x+c)+u.
    const MapAnalysis* use = &an;
    MapAnalysis shifted;
    if (an.f.table[0] != 0 || an.pp.omega[0] != 1) {
        Elem y0 = 0;
        for (Elem y = 0; y < an.pp.q; ++y)
            if (an.pp.omega[y] == 1) {
                y0 = y;
                break;
            }
        Elem x0 = 0;
        for (Elem x = 0; x < an.pp.q; ++x)
            if (an.f.table[x] == y0) {
                x0 = x;
                break;
            }
        shifted = analyze_map(shift_normalize(an.f, x0, y0), WalshMode::Full,
                              std::max(n, kWalshFullCap), std::max(n, kWalshZeroCap));
        use = &shifted;
        r.witnesses["normalized"] = true;
    }

    const WalshProfile& wp = *use->wp;
    const std::uint64_t qm1 = std::uint64_t(an.pp.q) - 1;

    bool main_ok = true;
    const bool plateaued = wp.component_wise_plateaued;
    r.hypotheses_hold = plateaued;
    if (plateaued) {
        const std::uint64_t bent_want = (std::uint64_t(1) << rr) * qm1 / k;
        const std::uint64_t amp_want = qm1 / k;
        const std::int64_t w_lo = (m % 2 ? -1 : 1) * (std::int64_t(1) << (rr * m));
        const std::int64_t w_hi = (m % 2 ? 1 : -1) * (std::int64_t(1) << (rr * (m + 1)));
        main_ok = wp.bent_count == bent_want &&
                  wp.amplitude_count(2 * rr) == amp_want &&
                  std::uint64_t(wp.bent_count) + wp.amplitude_count(2 * rr) == qm1;
        for (std::size_t b = 1; b < wp.comps.size() && main_ok; ++b)
            if (wp.comps[b].w0 != w_lo && wp.comps[b].w0 != w_hi) main_ok = false;
        r.witnesses["bent_count"] = wp.bent_count;
        r.witnesses["bent_expected"] = bent_want;
        r.witnesses["amplitude_2r_count"] = wp.amplitude_count(2 * rr);
        r.witnesses["amplitude_2r_expected"] = amp_want;
        r.witnesses["w0_values"] = {w_lo, w_hi};
        if (rr == 1) {
            // r = 1: APN with the classical Walsh spectrum
            const bool apn = an.dp.d == 2;
            const bool classical = wp.classical;
            r.witnesses["clause_r1_apn"] = apn;
            r.witnesses["clause_r1_classical"] = classical;
            main_ok = main_ok && apn && classical;
        }
    }

    bool converse_ok = true;
    if (m == 1) {
        // n = 2r: component-wise plateaued iff 2^n - 2^(n/2) bent components
        const std::uint64_t max_bent = (std::uint64_t(1) << n) - (std::uint64_t(1) << (n / 2));
        converse_ok = plateaued == (wp.bent_count == max_bent);
        r.witnesses["clause_m1_converse"] = converse_ok;
        r.hypotheses_hold = true;  // the m = 1 biconditional needs no plateaued hypothesis
        if (!plateaued) {
            r.conclusion_holds = converse_ok;
            return r;
        }
    }

    if (!plateaued) {
        r.note = "not component-wise plateaued";
        return r;
    }
    r.conclusion_holds = main_ok && converse_ok;
    return r;
}

std::vector<TheoremReport> check_upper_bounds(const MapAnalysis& an) {
    std::vector<TheoremReport> out;
    const Field& F = *an.f.field;
    const std::uint64_t q = an.pp.q;
    const std::uint64_t img = an.pp.image_size;
    const bool binary = F.p() == 2;
    const unsigned n = F.n();

    {  // ub.coulter-senger: image <= 2^n - (sqrt(4N - 2^(n+2) + 1) - 1)/2
        TheoremReport r;
        r.id = "ub.coulter-senger";
        if (!binary) {
            out.push_back(not_applicable(r.id, "p != 2"));
        } else {
            r.applicable = r.hypotheses_hold = true;
            const std::uint64_t delta = 4 * an.pp.N - 4 * q + 1;
            const std::uint64_t s = isqrt_ceil(delta);
            const std::uint64_t bound = q - s / 2;
            r.witnesses["N"] = an.pp.N;
            r.witnesses["sqrt_exact"] = s * s == delta;
            r.witnesses["bound"] = bound;
            r.witnesses["image_size"] = img;
            r.witnesses["slack"] = bound - std::min(bound, img);
            r.conclusion_holds = img <= bound;
            out.push_back(std::move(r));
        }
    }

    {  // ub.ab: image <= 2^n - ((k-1)/k) 2^((n+1)/2), k = max omega
        TheoremReport r;
        r.id = "ub.ab";
        if (!binary || n % 2 != 1 || n < 3)
            out.push_back(not_applicable(r.id, "needs p = 2 and odd n >= 3"));
        else if (!an.wp || !an.wp->full)
            out.push_back(not_applicable(r.id, "full Walsh profile unavailable"));
        else if (!is_almost_bent(*an.wp))
            out.push_back(not_applicable(r.id, "map is not almost bent"));
        else {
            r.applicable = r.hypotheses_hold = true;
            const std::uint32_t kmax = an.pp.M.rbegin()->first;
            const std::uint64_t peak = std::uint64_t(1) << ((n + 1) / 2);
            const std::uint64_t bound = q - ceil_div((kmax - 1) * peak, kmax);
            r.witnesses["k"] = kmax;
            r.witnesses["bound"] = bound;
            r.witnesses["image_size"] = img;
            bool ok = img <= bound;
            if (kmax > 1) {
                const std::uint64_t np_bound = q - (std::uint64_t(1) << ((n - 1) / 2));
                r.witnesses["non_permutation_bound"] = np_bound;
                ok = ok && img <= np_bound;
            }
            r.conclusion_holds = ok;
            out.push_back(std::move(r));
        }
    }

    {  // ub.bent-count: N >= t + 2^n and image <= 2^n - (sqrt(4t+1)-1)/2
        TheoremReport r;
        r.id = "ub.bent-count";
        if (!binary || n % 2 != 0)
            out.push_back(not_applicable(r.id, "needs p = 2 and n even"));
        else if (!an.wp || !an.wp->full)
            out.push_back(not_applicable(r.id, "full Walsh profile unavailable"));
        else {
            r.applicable = r.hypotheses_hold = true;
            const std::uint64_t t = an.wp->bent_count;
            const std::uint64_t s = isqrt_ceil(4 * t + 1);
            const std::uint64_t bound = q - s / 2;
            r.witnesses["sqrt_exact"] = s * s == 4 * t + 1;
            r.witnesses["bent_count"] = t;
            r.witnesses["N"] = an.pp.N;
            r.witnesses["bound"] = bound;
            r.witnesses["image_size"] = img;
            r.conclusion_holds = an.pp.N >= t + q && img <= bound;
            out.push_back(std::move(r));
        }
    }

    {  // ub.plateaued-apn
        TheoremReport r;
        r.id = "ub.plateaued-apn";
        if (!binary)
            out.push_back(not_applicable(r.id, "p != 2"));
        else if (!an.wp || !an.wp->full)
            out.push_back(not_applicable(r.id, "full Walsh profile unavailable"));
        else if (!an.wp->component_wise_plateaued)
            out.push_back(not_applicable(r.id, "not component-wise plateaued"));
        else if (an.dp.d != 2)
            out.push_back(not_applicable(r.id, "map is not APN"));
        else if (n % 2 == 1 && an.pp.is_permutation())
            out.push_back(not_applicable(r.id, "bijective with n odd"));
        else {
            r.applicable = r.hypotheses_hold = true;
            std::uint64_t bound;
            if (n % 2 == 1) {
                bound = q - (std::uint64_t(1) << ((n - 1) / 2));
            } else {
                const std::uint64_t delta = 8 * (q - 1) / 3 + 1;
                bound = q - isqrt_ceil(delta) / 2;
            }
            r.witnesses["bound"] = bound;
            r.witnesses["image_size"] = img;
            r.conclusion_holds = img <= bound;
            out.push_back(std::move(r));
        }
    }

    {  // ub.wan: non-bijective maps, image <= 2^n - (2^n - 1)/deg
        TheoremReport r;
        r.id = "ub.wan";
        const std::uint32_t deg = degree(an.pr);
        if (!binary)
            out.push_back(not_applicable(r.id, "p != 2"));
        else if (an.pp.is_permutation())
            out.push_back(not_applicable(r.id, "map is bijective"));
        else if (deg == 0)
            out.push_back(not_applicable(r.id, "constant map"));
        else {
            r.applicable = r.hypotheses_hold = true;
            const std::uint64_t bound = q - ceil_div(q - 1, deg);
            r.witnesses["degree"] = deg;
            r.witnesses["bound"] = bound;
            r.witnesses["image_size"] = img;
            r.conclusion_holds = img <= bound;
            out.push_back(std::move(r));
        }
    }

    return out;
}

std::vector<TheoremReport> run_all(const MapAnalysis& an) {
    std::vector<TheoremReport> out;
    out.push_back(check_lower_bound(an));
    out.push_back(check_mr_inequalities(an));
    out.push_back(check_apn_lower_bound_cases(an));
    out.push_back(check_sufficient_3to1(an));
    out.push_back(check_do_equivalence(an));
    out.push_back(check_subfield_permutation(an));
    out.push_back(check_ab_properties(an));
    out.push_back(check_k_to_1_spectrum(an));
    for (auto& r : check_upper_bounds(an)) out.push_back(std::move(r));
    return out;
}

nlohmann::json to_json(const TheoremReport& r) {
    nlohmann::json j;
    j["id"] = r.id;
    j["applicable"] = r.applicable;
    j["hypotheses_hold"] = r.hypotheses_hold;
    if (r.conclusion_holds) j["conclusion_holds"] = *r.conclusion_holds;
    else j["conclusion_holds"] = nullptr;
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
    return j;
}

}  // namespace apn
