#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "apn/map.hpp"

namespace apn {

/// Image/preimage statistics of a map: image size, the counts M_r of image
/// elements with exactly r preimages, the collision count N = #{(x,y):
/// f(x)=f(y)}, and the per-element preimage counts omega.
struct PreimageProfile {
    std::uint32_t q = 0;
    std::uint32_t image_size = 0;
    std::uint64_t N = 0;
    std::map<std::uint32_t, std::uint32_t> M;  // r -> M_r, r >= 1
    std::vector<std::uint32_t> omega;          // size q

    std::uint32_t M_at(std::uint32_t r) const {
        auto it = M.find(r);
        return it == M.end() ? 0 : it->second;
    }
    bool is_permutation() const { return M_at(1) == q; }
};

PreimageProfile preimage_profile(const MapTable& f);

/// k-to-1: M_k = image size and all other M_r = 0.
bool is_k_to_1(const PreimageProfile& pp, std::uint32_t k);

/// Almost-k-to-1: M_1 = 1, M_k = image size - 1, all other M_r = 0.
bool is_almost_k_to_1(const PreimageProfile& pp, std::uint32_t k);

/// The k >= 2 with is_almost_k_to_1(pp, k), if any.
std::optional<std::uint32_t> almost_k_to_1_value(const PreimageProfile& pp);

/// When the image size is minimal for a d-uniform map, i.e. equals
/// (q + eps)/(d+1) with 1 <= eps <= d: the exceptional set
/// D = {y in Image : omega(y) != d+1} together with eps.
struct ExceptionalSet {
    std::uint32_t eps = 0;
    std::vector<Elem> D;
};
std::optional<ExceptionalSet> exceptional_set(const PreimageProfile& pp, std::uint32_t d);

/// Differential statistics: the uniformity d, per-direction zero-solution
/// counts, t0 = #{a != 0 : f(x+a)-f(x) = 0 solvable} and per-direction row
/// maxima. The q x q difference table is never materialized; rows are
/// streamed with a length-q scratch histogram.
struct DifferentialProfile {
    std::uint32_t q = 0;
    std::uint32_t d = 0;
    std::uint32_t t0 = 0;
    std::vector<std::uint32_t> zero_solutions;  // index a, [0] = q
    std::vector<std::uint32_t> max_row;         // index a, [0] = q
};

DifferentialProfile differential_profile(const MapTable& f);

/// f(x+a) - f(x) = 0 has exactly d solutions for every a != 0.
bool is_zero_difference_balanced(const DifferentialProfile& dp, std::uint32_t d);
bool is_zero_difference_balanced(const MapTable& f, std::uint32_t d);

/// The value set D_a(f) = {f(x+a) - f(x)}, sorted. Requires a != 0.
struct DifferentialSet {
    Elem a = 0;
    std::vector<Elem> elems;
};
DifferentialSet differential_set(const MapTable& f, Elem a);

enum class SubspaceType { Linear, Affine, Neither };

/// Classify a set of codes: linear iff it contains 0 and is closed under
/// addition and F_p-scaling (closure tested against a membership bitset);
/// affine iff translating by a member makes it linear.
SubspaceType subspace_type(const Field& field, const std::vector<Elem>& set);

/// p = 2 only: every differential set is an affine subspace of size 2^(n-1).
bool is_crooked(const MapTable& f);

/// Cross-module consistency of the two profiles: the three M_r identities,
/// N = q + sum of zero solutions, N <= q + d*t0 with its equality
/// characterization, N <= (d+1)q - d, the Cauchy-Schwarz bound with its
/// k-to-1 equality case, N = q exactly for permutations, and even
/// zero-solution counts when p = 2. Throws std::logic_error on violation.
void check_profile_consistency(const MapTable& f, const PreimageProfile& pp,
                               const DifferentialProfile& dp);

}  // namespace apn
