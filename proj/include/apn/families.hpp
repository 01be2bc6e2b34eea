#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "apn/map.hpp"

namespace apn::families {

/// x^(2^k+1). Warns (does not error) when gcd(k, n) != 1, since non-APN
/// Gold maps are legitimate analysis subjects.
MapTable gold(const FieldRef& field, unsigned k);

/// x^3 + Tr(x^9). p = 2, any n.
MapTable cube_plus_trace(const FieldRef& field);

/// x^3 + a^-1 Tr(a^3 x^9). p = 2, n odd, a != 0; 2-to-1 APN downstream.
MapTable cube_trace_2to1(const FieldRef& field, Elem a);

/// x^3 + a^-1 Tr_{2^3m/2^3}(a^3 x^9 + a^6 x^18) on F_{2^3m}, a != 0,
/// and the squared-trace variant.
MapTable budaghyan_f1(const FieldRef& field, Elem a);
MapTable budaghyan_f2(const FieldRef& field, Elem a);

/// The pre-substitution maps x + a^-1 Tr_{2^3m/2^3}(a^3 x^3 + a^6 x^6)
/// (resp. squared trace); bijective when m is even.
MapTable budaghyan_base_f1(const FieldRef& field, Elem a);
MapTable budaghyan_base_f2(const FieldRef& field, Elem a);

/// Zhou-Pott bivariate maps over F_{2^m}, m, i >= 2 even, gcd(k, m) = 1,
/// alpha not a cube:
///   f(x,y) = (x^(2^k+1) + alpha y^((2^k+1)2^i), x y)
///   g(x,y) = (x^(2^k+1) + alpha y^(2^k+1),      x y^(2^(m-i)))
BivariateMap zhou_pott_f(const FieldRef& half, unsigned i, unsigned k, Elem alpha);
BivariateMap zhou_pott_g(const FieldRef& half, unsigned i, unsigned k, Elem alpha);

/// Gologlu bivariate maps over F_{2^m}, gcd(3k, m) = 1 (f2 also needs m odd):
///   f1(x,y) = (x^(2^k+1) + x y^(2^k) + y^(2^k+1),
///              x^(2^2k+1) + x^(2^2k) y + y^(2^2k+1))
///   f2(x,y) = (x^(2^k+1) + x y^(2^k) + y^(2^k+1), x^(2^3k) y + x y^(2^3k))
BivariateMap gologlu_f1(const FieldRef& half, unsigned k);
BivariateMap gologlu_f2(const FieldRef& half, unsigned k);

/// f(x) = f'(x^3) with f'(x) = x^2 + alpha x + gamma Tr(alpha^-3 x^3 + beta x),
/// for n even, alpha, beta, gamma nonzero, Tr(beta alpha) = 1 and gamma
/// outside Image(x -> x^2 + alpha x). f' is verified to be a permutation;
/// the returned map is APN and almost-3-to-1.
MapTable trace_switched_apn(const FieldRef& field, Elem alpha, Elem beta, Elem gamma);

/// Lexicographically first admissible (alpha, beta, gamma) triple, if any.
std::optional<std::array<Elem, 3>> find_switched_params(const FieldRef& field);

/// Pinned literal maps: "min7" (x^3+x^64+x^16+x^4 on F_2^7), "min11"
/// (x^3+x^256 on F_2^11), "dobbertin-g2" (x^339 on F_2^10).
MapTable named_example(const std::string& id);
std::vector<std::string> named_example_ids();

}  // namespace apn::families
