#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "apn/field.hpp"

namespace apn {

/// A map F_q -> F_q as a length-q lookup table, table[x] = f(x).
struct MapTable {
    FieldRef field;
    std::vector<Elem> table;

    Elem operator()(Elem x) const { return table[x]; }
};

/// Build a table by evaluating fn at every point.
template <typename Fn>
MapTable tabulate(const FieldRef& field, Fn&& fn) {
    MapTable f{field, std::vector<Elem>(field->q())};
    for (Elem x = 0; x < field->q(); ++x) f.table[x] = fn(x);
    return f;
}

/// Sparse univariate polynomial: (exponent, nonzero coefficient) pairs with
/// strictly increasing exponents below q.
struct PolyRepr {
    FieldRef field;
    std::vector<std::pair<std::uint32_t, Elem>> coeffs;
};

/// The unique interpolating polynomial of degree < q (Lagrange over all q
/// points, O(q^2)).
PolyRepr interpolate(const MapTable& f);

Elem evaluate(const PolyRepr& pr, Elem x);
MapTable to_table(const PolyRepr& pr);

/// Maximum exponent with nonzero coefficient; 0 for constant maps.
std::uint32_t degree(const PolyRepr& pr);

/// True iff every exponent has base-p digit sum exactly 2, i.e. is of the
/// form p^i + p^j (i != j required when p = 2, which the digit test encodes).
bool is_dembowski_ostrom(const PolyRepr& pr);

/// True iff every exponent is 0, p^i, or p^i + p^j (digit sum at most 2).
bool is_quadratic(const PolyRepr& pr);

/// True iff f(x) = f(wx) for all x and every w of order dividing k, checked
/// against one generator of the order-k subgroup. Requires k | q-1.
bool is_k_divisible(const MapTable& f, std::uint32_t k);

/// table'[x] = f(x + c) + u.
MapTable shift_normalize(const MapTable& f, Elem c, Elem u);

/// A map on F_{p^m} x F_{p^m} given by two component tables indexed by the
/// pair code x * p^m + y.
struct BivariateMap {
    FieldRef half;
    std::vector<Elem> g, h;  // size p^(2m), values < p^m

    Elem pair_code(Elem x, Elem y) const { return x * half->q() + y; }
};

/// Field embedding of small = F_{p^m} into big = F_{p^n}, m | n, via the
/// smallest root of small's modulus in big.
struct SubfieldEmbedding {
    FieldRef big, small;
    std::vector<Elem> to_big;            // index: small code
    std::vector<std::int64_t> to_small;  // index: big code, -1 if outside image
};

SubfieldEmbedding embed_subfield(const FieldRef& big, const FieldRef& small);

/// Convert a bivariate map to a univariate table on big = F_{p^2m} using the
/// basis {u1, u2} over the half field: with (v1, v2) the dual basis, z
/// decomposes as x*u1 + y*u2 with x = Tr_rel(v1 z), y = Tr_rel(v2 z), and
/// z maps to G(x,y)*u1 + H(x,y)*u2.
MapTable bivariate_to_univariate(const BivariateMap& bv, const FieldRef& big,
                                 Elem u1, Elem u2);

// --- file formats ---
// LUT: line 1 = field record, line 2 = q whitespace-separated codes.
// Polynomial: "e:c" pairs, whitespace-separated, exponents increasing.
// Bivariate: line 1 = half-field record, lines 2 and 3 = the G and H tables.

void write_lut(std::ostream& os, const MapTable& f);
MapTable read_lut(std::istream& is, std::size_t table_cap = Field::kDefaultTableCap);
void write_poly(std::ostream& os, const PolyRepr& pr);
void write_bivariate(std::ostream& os, const BivariateMap& bv);
BivariateMap read_bivariate(std::istream& is, std::size_t table_cap = Field::kDefaultTableCap);

/// FNV-1a 64-bit digest over the table codes (little-endian 32-bit each),
/// rendered as "fnv1a64:<16 hex digits>".
std::string lut_digest(const MapTable& f);

}  // namespace apn
