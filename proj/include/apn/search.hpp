#pragma once

#include <functional>

#include <json.hpp>

#include "apn/map.hpp"
#include "apn/spectra.hpp"

namespace apn {

/// True iff no nonzero direction has a difference value hit more than d
/// times (early-exit uniformity test).
bool uniformity_at_most(const MapTable& f, std::uint32_t d);

struct MonomialResult {
    std::uint32_t k = 0;
    std::uint32_t d = 0;
    std::uint64_t gcd_qm1 = 0;
    std::uint32_t image_size = 0;
};

/// Exact differential uniformity and image size of x^k for every
/// k in 1..q-2, in exponent order.
std::vector<MonomialResult> monomial_scan(const FieldRef& field);

using EmitFn = std::function<void(const nlohmann::json&)>;

/// Sample random quadratic maps (random DO coefficients, optionally with a
/// random affine part) and emit one JSON line per sample: uniformity, image
/// size, digest, and the coefficient recipe. Deterministic for a seed.
void quadratic_random_search(const FieldRef& field, std::uint64_t seed,
                             std::uint32_t samples, bool include_affine,
                             const EmitFn& emit);

/// Sample random quadratic DO maps with f(0) = 0 at even n; every APN hit
/// at the minimal image size (2^n+2)/3 is emitted with its preimage-case
/// classification (1, 2 or 3). Cases 2/3 are reported, not asserted against.
void minimal_image_probe(const FieldRef& field, std::uint64_t seed,
                         std::uint32_t samples, const EmitFn& emit);

}  // namespace apn
