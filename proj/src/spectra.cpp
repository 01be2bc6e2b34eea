#include "apn/spectra.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace apn {

PreimageProfile preimage_profile(const MapTable& f) {
    const Elem q = f.field->q();
    PreimageProfile pp;
    pp.q = q;
    pp.omega.assign(q, 0);
    for (Elem x = 0; x < q; ++x) ++pp.omega[f.table[x]];
    for (Elem y = 0; y < q; ++y) {
        const std::uint32_t w = pp.omega[y];
        if (w == 0) continue;
        ++pp.image_size;
        ++pp.M[w];
        pp.N += std::uint64_t(w) * w;
    }
    std::uint64_t sum_m = 0, sum_rm = 0, sum_r2m = 0;
    for (const auto& [r, m] : pp.M) {
        sum_m += m;
        sum_rm += std::uint64_t(r) * m;
        sum_r2m += std::uint64_t(r) * r * m;
    }
    if (sum_m != pp.image_size || sum_rm != q || sum_r2m != pp.N)
        throw std::logic_error("preimage_profile: M_r identities violated");
    return pp;
}

bool is_k_to_1(const PreimageProfile& pp, std::uint32_t k) {
    return pp.M.size() == 1 && pp.M_at(k) == pp.image_size;
}

bool is_almost_k_to_1(const PreimageProfile& pp, std::uint32_t k) {
    if (k < 2) return false;
    return pp.M.size() == 2 && pp.M_at(1) == 1 && pp.M_at(k) == pp.image_size - 1;
}

std::optional<std::uint32_t> almost_k_to_1_value(const PreimageProfile& pp) {
    if (pp.M.size() != 2 || pp.M_at(1) != 1) return std::nullopt;
    const auto k = pp.M.rbegin()->first;
    if (is_almost_k_to_1(pp, k)) return k;
    return std::nullopt;
}

std::optional<ExceptionalSet> exceptional_set(const PreimageProfile& pp,
                                              std::uint32_t d) {
    const std::uint64_t lhs = std::uint64_t(pp.image_size) * (d + 1);
    if (lhs < pp.q || lhs - pp.q < 1 || lhs - pp.q > d) return std::nullopt;
    ExceptionalSet ex;
    ex.eps = static_cast<std::uint32_t>(lhs - pp.q);
    for (Elem y = 0; y < pp.q; ++y)
        if (pp.omega[y] != 0 && pp.omega[y] != d + 1) ex.D.push_back(y);
    return ex;
}

DifferentialProfile differential_profile(const MapTable& f) {
    const Field& F = *f.field;
    const Elem q = F.q();
    DifferentialProfile dp;
    dp.q = q;
    dp.zero_solutions.assign(q, 0);
    dp.max_row.assign(q, 0);
    dp.zero_solutions[0] = q;
    dp.max_row[0] = q;

    std::vector<std::uint32_t> hist(q);
    for (Elem a = 1; a < q; ++a) {
        std::memset(hist.data(), 0, sizeof(std::uint32_t) * q);
        for (Elem x = 0; x < q; ++x)
            ++hist[F.sub(f.table[F.add(x, a)], f.table[x])];
        std::uint32_t row_max = 0;
        for (Elem b = 0; b < q; ++b) row_max = std::max(row_max, hist[b]);
        dp.max_row[a] = row_max;
        dp.zero_solutions[a] = hist[0];
        dp.d = std::max(dp.d, row_max);
        if (hist[0] > 0) ++dp.t0;
        if (F.p() == 2 && hist[0] % 2 != 0)
            throw std::logic_error("differential_profile: odd zero-solution count at p=2");
    }
    return dp;
}

bool is_zero_difference_balanced(const DifferentialProfile& dp, std::uint32_t d) {
    for (Elem a = 1; a < dp.q; ++a)
        if (dp.zero_solutions[a] != d) return false;
    return true;
}

bool is_zero_difference_balanced(const MapTable& f, std::uint32_t d) {
    const Field& F = *f.field;
    const Elem q = F.q();
    for (Elem a = 1; a < q; ++a) {
        std::uint32_t cnt = 0;
        for (Elem x = 0; x < q; ++x)
            if (f.table[F.add(x, a)] == f.table[x]) ++cnt;
        if (cnt != d) return false;
    }
    return true;
}

DifferentialSet differential_set(const MapTable& f, Elem a) {
    if (a == 0) throw std::invalid_argument("differential_set: a must be nonzero");
    const Field& F = *f.field;
    std::vector<char> seen(F.q(), 0);
    DifferentialSet ds{a, {}};
    for (Elem x = 0; x < F.q(); ++x) seen[F.sub(f.table[F.add(x, a)], f.table[x])] = 1;
    for (Elem v = 0; v < F.q(); ++v)
        if (seen[v]) ds.elems.push_back(v);
    return ds;
}

namespace {

bool is_power_of(std::size_t v, unsigned p) {
    if (v == 0) return false;
    while (v % p == 0) v /= p;
    return v == 1;
}

bool closed_linear(const Field& F, const std::vector<Elem>& set) {
    if (!is_power_of(set.size(), F.p())) return false;
    bool has_zero = false;
    for (Elem v : set)
        if (v == 0) has_zero = true;
    if (!has_zero) return false;

    if (F.p() == 2 && set.size() > 64) {
        // XOR-span rank: the set is a subspace iff it has 2^rank elements
        Elem basis[32] = {0};
        unsigned rank = 0;
        for (Elem v : set) {
            for (unsigned b = 32; b-- > 0;)
                if ((v >> b) & 1) {
                    if (basis[b]) {
                        v ^= basis[b];
                    } else {
                        basis[b] = v;
                        ++rank;
                        v = 0;
                    }
                    if (v == 0) break;
                }
        }
        return (std::size_t(1) << rank) == set.size();
    }

    std::vector<char> member(F.q(), 0);
    for (Elem v : set) member[v] = 1;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i; j < set.size(); ++j)
            if (!member[F.add(set[i], set[j])]) return false;
        if (F.p() > 2)
            for (unsigned c = 2; c < F.p(); ++c)
                if (!member[F.scalar_mul(set[i], c)]) return false;
    }
    return true;
}

}  // namespace

SubspaceType subspace_type(const Field& field, const std::vector<Elem>& set) {
    if (set.empty()) return SubspaceType::Neither;
    if (closed_linear(field, set)) return SubspaceType::Linear;
    const Elem v0 = set.front();
    std::vector<Elem> shifted;
    shifted.reserve(set.size());
    for (Elem v : set) shifted.push_back(field.sub(v, v0));
    if (closed_linear(field, shifted)) return SubspaceType::Affine;
    return SubspaceType::Neither;
}

bool is_crooked(const MapTable& f) {
    const Field& F = *f.field;
    if (F.p() != 2) throw std::invalid_argument("is_crooked: p must be 2");
    for (Elem a = 1; a < F.q(); ++a) {
        DifferentialSet ds = differential_set(f, a);
        if (ds.elems.size() != F.q() / 2) return false;
        if (subspace_type(F, ds.elems) == SubspaceType::Neither) return false;
    }
    return true;
}

void check_profile_consistency(const MapTable& f, const PreimageProfile& pp,
                               const DifferentialProfile& dp) {
    const Field& F = *f.field;
    const Elem q = F.q();

    std::uint64_t zero_sum = 0;
    bool all_full_or_empty = true;
    for (Elem a = 1; a < q; ++a) {
        zero_sum += dp.zero_solutions[a];
        if (dp.zero_solutions[a] != 0 && dp.zero_solutions[a] != dp.d)
            all_full_or_empty = false;
    }
    if (pp.N != q + zero_sum)
        throw std::logic_error("consistency: N != q + sum of zero solutions");
    const std::uint64_t lemma_bound = q + std::uint64_t(dp.d) * dp.t0;
    if (pp.N > lemma_bound)
        throw std::logic_error("consistency: N exceeds q + d*t0");
    if ((pp.N == lemma_bound) != all_full_or_empty)
        throw std::logic_error("consistency: N = q + d*t0 equality characterization");
    const std::uint64_t zdb_N = std::uint64_t(dp.d + 1) * q - dp.d;
    if (pp.N > zdb_N)
        throw std::logic_error("consistency: N exceeds (d+1)q - d");
    if ((pp.N == zdb_N) != is_zero_difference_balanced(dp, dp.d))
        throw std::logic_error("consistency: N = (d+1)q - d iff zero-difference d-balanced");

    const std::uint64_t q2 = std::uint64_t(q) * q;
    if (pp.image_size < (q2 + pp.N - 1) / pp.N)
        throw std::logic_error("consistency: image below the Cauchy-Schwarz bound");
    const bool cs_equality =
        (unsigned __int128)(pp.image_size) * pp.N == (unsigned __int128)q2;
    if (cs_equality != (pp.M.size() == 1))
        throw std::logic_error("consistency: Cauchy-Schwarz equality iff k-to-1");

    if ((pp.N == q) != pp.is_permutation())
        throw std::logic_error("consistency: N = q iff permutation");
    if (F.p() == 2)
        for (Elem a = 1; a < q; ++a)
            if (dp.zero_solutions[a] % 2 != 0)
                throw std::logic_error("consistency: odd zero-solution count at p=2");
}

}  // namespace apn
