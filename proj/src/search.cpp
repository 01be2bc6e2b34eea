#include "apn/search.hpp"

#include <cstring>
#include <numeric>
#include <random>

namespace apn {

bool uniformity_at_most(const MapTable& f, std::uint32_t d) {
    const Field& F = *f.field;
    const Elem q = F.q();
    std::vector<std::uint32_t> hist(q);
    for (Elem a = 1; a < q; ++a) {
        std::memset(hist.data(), 0, sizeof(std::uint32_t) * q);
        for (Elem x = 0; x < q; ++x)
            if (++hist[F.sub(f.table[F.add(x, a)], f.table[x])] > d) return false;
    }
    return true;
}

std::vector<MonomialResult> monomial_scan(const FieldRef& field) {
    const Field& F = *field;
    const Elem q = F.q();
    std::vector<MonomialResult> out;
    out.reserve(q > 2 ? q - 2 : 0);
    for (std::uint32_t k = 1; k + 1 < q; ++k) {
        MapTable f = tabulate(field, [&](Elem x) { return F.pow(x, k); });
        const auto dp = differential_profile(f);
        const auto pp = preimage_profile(f);
        out.push_back({k, dp.d, std::gcd(std::uint64_t(k), std::uint64_t(q) - 1), pp.image_size});
    }
    return out;
}

namespace {

// Quadratic exponents p^i + p^j (i < j for p = 2, i <= j otherwise) plus the
// affine exponents {0, p^i}, as map exponents below q - 1 resolution.
struct QuadraticSampler {
    const Field& F;
    std::vector<std::uint64_t> do_exps, affine_exps;

    explicit QuadraticSampler(const Field& field) : F(field) {
        const unsigned n = F.n();
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i; j < n; ++j) {
                if (F.p() == 2 && i == j) continue;
                std::uint64_t e = 1, e2 = 1;
                for (unsigned t = 0; t < i; ++t) e *= F.p();
                for (unsigned t = 0; t < j; ++t) e2 *= F.p();
                do_exps.push_back(e + e2);
            }
            std::uint64_t e = 1;
            for (unsigned t = 0; t < i; ++t) e *= F.p();
            affine_exps.push_back(e);
        }
    }

    // Sparse coefficient list; roughly half the exponents present.
    std::vector<std::pair<std::uint64_t, Elem>> draw(std::mt19937_64& rng,
                                                     bool include_affine,
                                                     bool with_constant) const {
        std::vector<std::pair<std::uint64_t, Elem>> terms;
        std::uniform_int_distribution<Elem> coef(1, F.q() - 1);
        for (std::uint64_t e : do_exps)
            if (rng() & 1) terms.emplace_back(e, coef(rng));
        if (include_affine) {
            for (std::uint64_t e : affine_exps)
                if (rng() & 1) terms.emplace_back(e, coef(rng));
            if (with_constant && (rng() & 1)) terms.emplace_back(0, coef(rng));
        }
        return terms;
    }

    MapTable build(const FieldRef& field,
                   const std::vector<std::pair<std::uint64_t, Elem>>& terms) const {
        return tabulate(field, [&](Elem x) {
            Elem acc = 0;
            for (const auto& [e, c] : terms) acc = F.add(acc, F.mul(c, F.pow(x, e)));
            return acc;
        });
    }
};

nlohmann::json terms_json(const std::vector<std::pair<std::uint64_t, Elem>>& terms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms) arr.push_back({{"e", e}, {"c", c}});
    return arr;
}

}  // namespace

void quadratic_random_search(const FieldRef& field, std::uint64_t seed,
                             std::uint32_t samples, bool include_affine,
                             const EmitFn& emit) {
    std::mt19937_64 rng(seed);
    QuadraticSampler sampler(*field);
    for (std::uint32_t s = 0; s < samples; ++s) {
        const auto terms = sampler.draw(rng, include_affine, true);
        const MapTable f = sampler.build(field, terms);
        const auto dp = differential_profile(f);
        const auto pp = preimage_profile(f);
        nlohmann::json j;
        j["sample"] = s;
        j["seed"] = seed;
        j["terms"] = terms_json(terms);
        j["d"] = dp.d;
        j["image_size"] = pp.image_size;
        j["digest"] = lut_digest(f);
        emit(j);
    }
}

void minimal_image_probe(const FieldRef& field, std::uint64_t seed,
                         std::uint32_t samples, const EmitFn& emit) {
    const Field& F = *field;
    if (F.p() != 2 || F.n() % 2 != 0)
        throw std::invalid_argument("minimal_image_probe: needs p = 2 and n even");
    std::mt19937_64 rng(seed);
    QuadraticSampler sampler(F);
    const std::uint32_t min_image = (F.q() + 2) / 3;
    for (std::uint32_t s = 0; s < samples; ++s) {
        const auto terms = sampler.draw(rng, false, false);  // DO part only, f(0)=0
        const MapTable f = sampler.build(field, terms);
        if (!uniformity_at_most(f, 2)) continue;
        const auto pp = preimage_profile(f);
        if (pp.image_size != min_image) continue;

        int preimage_case = 0;
        if (pp.M.size() == 2 && pp.M_at(1) == 1 && pp.M_at(3) == min_image - 1)
            preimage_case = 1;
        else if (pp.M.size() == 2 && pp.M_at(2) == 2 && pp.M_at(3) == min_image - 2)
            preimage_case = 2;
        else if (pp.M.size() == 3 && pp.M_at(2) == 3 && pp.M_at(4) == 1 &&
                 pp.M_at(3) == min_image - 4)
            preimage_case = 3;

        nlohmann::json j;
        j["sample"] = s;
        j["seed"] = seed;
        j["terms"] = terms_json(terms);
        j["image_size"] = pp.image_size;
        j["case"] = preimage_case;
        j["hit"] = preimage_case == 2 || preimage_case == 3;
        j["digest"] = lut_digest(f);
        emit(j);
    }
}

}  // namespace apn
