#include "apn/map.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace apn {

PolyRepr interpolate(const MapTable& f) {
    const Field& F = *f.field;
    const Elem q = F.q();
    PolyRepr pr{f.field, {}};
    if (q == 1) return pr;

    // a_0 = f(0); a_j = -sum_{c!=0} f(c) c^(q-1-j) for 1 <= j <= q-2;
    // a_{q-1} = -sum_c f(c).
    std::vector<Elem> coeff(q, 0);
    coeff[0] = f.table[0];
    for (std::uint32_t j = 1; j + 1 < q; ++j) {
        Elem s = 0;
        for (Elem c = 1; c < q; ++c) {
            if (f.table[c] == 0) continue;
            s = F.add(s, F.mul(f.table[c], F.pow(c, q - 1 - j)));
        }
        coeff[j] = F.neg(s);
    }
    Elem s = 0;
    for (Elem c = 0; c < q; ++c) s = F.add(s, f.table[c]);
    coeff[q - 1] = F.neg(s);

    for (std::uint32_t e = 0; e < q; ++e)
        if (coeff[e] != 0) pr.coeffs.emplace_back(e, coeff[e]);
    return pr;
}

Elem evaluate(const PolyRepr& pr, Elem x) {
    const Field& F = *pr.field;
    Elem acc = 0;
    for (const auto& [e, c] : pr.coeffs) acc = F.add(acc, F.mul(c, F.pow(x, e)));
    return acc;
}

MapTable to_table(const PolyRepr& pr) {
    return tabulate(pr.field, [&](Elem x) { return evaluate(pr, x); });
}

std::uint32_t degree(const PolyRepr& pr) {
    return pr.coeffs.empty() ? 0 : pr.coeffs.back().first;
}

namespace {

unsigned digit_sum(std::uint32_t e, unsigned p) {
    unsigned s = 0;
    while (e) {
        s += e % p;
        e /= p;
        if (s > 2) break;
    }
    return s;
}

}  // namespace

bool is_dembowski_ostrom(const PolyRepr& pr) {
    for (const auto& [e, c] : pr.coeffs)
        if (digit_sum(e, pr.field->p()) != 2) return false;
    return true;
}

bool is_quadratic(const PolyRepr& pr) {
    for (const auto& [e, c] : pr.coeffs)
        if (digit_sum(e, pr.field->p()) > 2) return false;
    return true;
}

bool is_k_divisible(const MapTable& f, std::uint32_t k) {
    const Field& F = *f.field;
    if (k == 0 || (F.q() - 1) % k != 0)
        throw std::invalid_argument("is_k_divisible: k does not divide q-1");
    if (k == 1) return true;
    const Elem w = F.exp((F.q() - 1) / k);  // order-k subgroup generator
    for (Elem x = 0; x < F.q(); ++x)
        if (f.table[x] != f.table[F.mul(w, x)]) return false;
    return true;
}

MapTable shift_normalize(const MapTable& f, Elem c, Elem u) {
    const Field& F = *f.field;
    return tabulate(f.field, [&](Elem x) { return F.add(f.table[F.add(x, c)], u); });
}

SubfieldEmbedding embed_subfield(const FieldRef& big, const FieldRef& small) {
    const Field& B = *big;
    const Field& S = *small;
    if (B.p() != S.p() || B.n() % S.n() != 0)
        throw std::invalid_argument("embed_subfield: not a subfield shape");

    // Smallest root of small's modulus inside big.
    Elem root = 0;
    bool found = false;
    const auto& mod = S.modulus();
    for (Elem z = 0; z < B.q(); ++z) {
        Elem acc = 0;
        for (std::size_t i = mod.size(); i-- > 0;)
            acc = B.add(B.mul(acc, z), mod[i] % B.p());
        if (acc == 0) {
            root = z;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("embed_subfield: modulus has no root");

    SubfieldEmbedding emb{big, small, std::vector<Elem>(S.q()),
                          std::vector<std::int64_t>(B.q(), -1)};
    for (Elem c = 0; c < S.q(); ++c) {
        Elem acc = 0, pw = 1, rest = c;
        // digits of c base p are coordinates in powers of the root
        for (unsigned i = 0; i < S.n(); ++i) {
            acc = B.add(acc, B.scalar_mul(pw, rest % S.p()));
            rest /= S.p();
            pw = B.mul(pw, root);
        }
        emb.to_big[c] = acc;
        emb.to_small[acc] = c;
    }
    return emb;
}

MapTable bivariate_to_univariate(const BivariateMap& bv, const FieldRef& big,
                                 Elem u1, Elem u2) {
    const Field& B = *big;
    const Field& S = *bv.half;
    const unsigned m = S.n();
    if (B.n() != 2 * m || B.p() != S.p())
        throw std::invalid_argument("bivariate_to_univariate: field degrees mismatch");

    const auto [v1, v2] = B.dual_basis(u1, u2);
    const auto emb = embed_subfield(big, bv.half);

    return tabulate(big, [&](Elem z) {
        const Elem xb = B.trace_relative(B.mul(v1, z), m);
        const Elem yb = B.trace_relative(B.mul(v2, z), m);
        const Elem x = static_cast<Elem>(emb.to_small[xb]);
        const Elem y = static_cast<Elem>(emb.to_small[yb]);
        const Elem pc = bv.pair_code(x, y);
        return B.add(B.mul(emb.to_big[bv.g[pc]], u1), B.mul(emb.to_big[bv.h[pc]], u2));
    });
}

void write_lut(std::ostream& os, const MapTable& f) {
    os << f.field->record() << '\n';
    for (Elem x = 0; x < f.field->q(); ++x) os << (x ? " " : "") << f.table[x];
    os << '\n';
}

MapTable read_lut(std::istream& is, std::size_t table_cap) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("lut: missing field record");
    FieldRef field = Field::parse_record(line, table_cap);
    MapTable f{field, std::vector<Elem>(field->q())};
    for (Elem x = 0; x < field->q(); ++x) {
        long long v = -1;
        if (!(is >> v) || v < 0 || v >= static_cast<long long>(field->q()))
            throw std::invalid_argument("lut: bad table entry");
        f.table[x] = static_cast<Elem>(v);
    }
    return f;
}

void write_poly(std::ostream& os, const PolyRepr& pr) {
    bool first = true;
    for (const auto& [e, c] : pr.coeffs) {
        os << (first ? "" : " ") << e << ':' << c;
        first = false;
    }
    if (first) os << "0:0";
    os << '\n';
}

void write_bivariate(std::ostream& os, const BivariateMap& bv) {
    os << bv.half->record() << '\n';
    for (std::size_t i = 0; i < bv.g.size(); ++i) os << (i ? " " : "") << bv.g[i];
    os << '\n';
    for (std::size_t i = 0; i < bv.h.size(); ++i) os << (i ? " " : "") << bv.h[i];
    os << '\n';
}

BivariateMap read_bivariate(std::istream& is, std::size_t table_cap) {
    std::string line;
    if (!std::getline(is, line))
        throw std::invalid_argument("bivariate: missing field record");
    FieldRef half = Field::parse_record(line, table_cap);
    const std::size_t sz = std::size_t(half->q()) * half->q();
    if (sz > table_cap)
        throw std::invalid_argument("bivariate: pair table exceeds the table cap");
    BivariateMap bv{half, std::vector<Elem>(sz), std::vector<Elem>(sz)};
    for (auto* tab : {&bv.g, &bv.h})
        for (std::size_t i = 0; i < sz; ++i) {
            long long v = -1;
            if (!(is >> v) || v < 0 || v >= static_cast<long long>(half->q()))
                throw std::invalid_argument("bivariate: bad table entry");
            (*tab)[i] = static_cast<Elem>(v);
        }
    return bv;
}

std::string lut_digest(const MapTable& f) {
    std::uint64_t h = 1469598103934665603ull;
    auto eat = [&](std::uint8_t b) {
        h ^= b;
        h *= 1099511628211ull;
    };
    for (Elem v : f.table)
        for (int i = 0; i < 4; ++i) eat(static_cast<std::uint8_t>(v >> (8 * i)));
    std::string out = "fnv1a64:";
    for (int i = 15; i >= 0; --i) out += "0123456789abcdef"[(h >> (4 * i)) & 0xf];
    return out;
}

}  // namespace apn
