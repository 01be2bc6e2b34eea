#include "apn/field.hpp"

#include <algorithm>
#include <sstream>

namespace apn {
namespace {

// Dense little-endian digit vectors over F_p, trimmed (no trailing zeros).
using Poly = std::vector<unsigned>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree_of(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

// Remainder of a mod m, m monic.
void poly_mod(Poly& a, const Poly& m, unsigned p) {
    const int dm = degree_of(m);
    while (degree_of(a) >= dm) {
        const unsigned c = a.back();
        const int shift = degree_of(a) - dm;
        for (int j = 0; j <= dm; ++j) {
            unsigned s = (c * m[static_cast<std::size_t>(j)]) % p;
            auto& digit = a[static_cast<std::size_t>(shift + j)];
            digit = (digit + p - s) % p;
        }
        trim(a);
    }
}

Poly code_to_poly(Elem code, unsigned p) {
    Poly d;
    while (code) {
        d.push_back(code % p);
        code /= p;
    }
    return d;
}

Elem poly_to_code(const Poly& a, unsigned p) {
    Elem c = 0;
    for (std::size_t i = a.size(); i-- > 0;) c = c * p + a[i];
    return c;
}

// Monic polynomial of degree d whose lower digits encode v base p.
Poly monic_from_index(std::uint64_t v, unsigned d, unsigned p) {
    Poly m(d + 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        m[i] = static_cast<unsigned>(v % p);
        v /= p;
    }
    m[d] = 1;
    return m;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& m, unsigned p) {
    const int dm = degree_of(m);
    if (dm < 1) return false;
    for (unsigned d = 1; d <= static_cast<unsigned>(dm) / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly div = monic_from_index(v, d, p);
            Poly rem = m;
            poly_mod(rem, div, p);
            if (rem.empty()) return false;
        }
    }
    return true;
}

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<Elem> prime_factors(Elem m) {
    std::vector<Elem> fs;
    for (Elem d = 2; std::uint64_t(d) * d <= m; ++d) {
        if (m % d == 0) {
            fs.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) fs.push_back(m);
    return fs;
}

// Raw (table-free) multiplication used only during construction.
struct RawMul {
    unsigned p, n;
    Poly modulus;
    std::uint64_t mod_mask;  // p = 2 fast path

    Elem mul(Elem a, Elem b) const {
        if (p == 2) {
            std::uint64_t acc = 0, x = a, y = b;
            while (y) {
                if (y & 1) acc ^= x;
                x <<= 1;
                y >>= 1;
            }
            for (int bit = 2 * static_cast<int>(n) - 2; bit >= static_cast<int>(n); --bit)
                if ((acc >> bit) & 1) acc ^= mod_mask << (bit - static_cast<int>(n));
            return static_cast<Elem>(acc);
        }
        Poly r = poly_mul(code_to_poly(a, p), code_to_poly(b, p), p);
        poly_mod(r, modulus, p);
        return poly_to_code(r, p);
    }

    Elem pw(Elem x, Elem e) const {
        Elem r = 1, base = x;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

}  // namespace

Elem Field::add_digits(Elem a, Elem b) const {
    Elem r = 0, scale = 1;
    while (a || b) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::neg_digits(Elem a) const {
    Elem r = 0, scale = 1;
    while (a) {
        unsigned d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::scalar_mul(Elem a, unsigned c) const {
    c %= p_;
    if (p_ == 2) return c ? a : 0;
    Elem r = 0, scale = 1;
    while (a) {
        r += ((a % p_) * c % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::frobenius(Elem x, unsigned t) const {
    std::uint64_t e = 1;
    for (unsigned i = 0; i < t; ++i) e *= p_;
    return pow(x, e);
}

Elem Field::trace_relative(Elem x, unsigned t) const {
    if (t == 0 || n_ % t != 0)
        throw std::invalid_argument("trace_relative: t does not divide n");
    Elem acc = x, cur = x;
    for (unsigned k = 1; k < n_ / t; ++k) {
        cur = frobenius(cur, t);
        acc = add(acc, cur);
    }
    return acc;
}

bool Field::is_cube(Elem x) const {
    if (x == 0) return true;
    if ((q_ - 1) % 3 != 0) return true;
    return log_[x] % 3 == 0;
}

std::vector<Elem> Field::subfield_elements(unsigned m) const {
    if (m == 0 || n_ % m != 0)
        throw std::invalid_argument("subfield_elements: m does not divide n");
    std::vector<Elem> out;
    for (Elem x = 0; x < q_; ++x)
        if (frobenius(x, m) == x) out.push_back(x);
    return out;
}

std::pair<Elem, Elem> Field::dual_basis(Elem u1, Elem u2) const {
    if (n_ % 2 != 0) throw std::invalid_argument("dual_basis: n must be even");
    const unsigned m = n_ / 2;
    const Elem s1 = frobenius(u1, m), s2 = frobenius(u2, m);
    const Elem det = sub(mul(u1, s2), mul(s1, u2));
    if (det == 0) throw std::invalid_argument("dual_basis: {u1, u2} is not a basis");
    const Elem idet = inv(det);
    const Elem v1 = mul(s2, idet);
    const Elem v2 = neg(mul(s1, idet));
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) {
            const Elem u = i == 0 ? u1 : u2, v = j == 0 ? v1 : v2;
            if (trace_relative(mul(u, v), m) != (i == j ? 1u : 0u))
                throw std::logic_error("dual_basis: defining property violated");
        }
    return {v1, v2};
}

std::string Field::record() const {
    std::ostringstream os;
    os << p_ << ' ' << n_;
    for (unsigned c : modulus_) os << ' ' << c;
    return os.str();
}

FieldRef Field::parse_record(const std::string& line, std::size_t table_cap) {
    std::istringstream is(line);
    unsigned p = 0, n = 0;
    if (!(is >> p >> n)) throw std::invalid_argument("field record: cannot parse p and n");
    std::vector<unsigned> mod(n + 1);
    for (auto& c : mod)
        if (!(is >> c)) throw std::invalid_argument("field record: truncated modulus");
    return make(p, n, std::move(mod), table_cap);
}

FieldRef Field::make(unsigned p, unsigned n, std::size_t table_cap) {
    return make(p, n, std::vector<unsigned>{}, table_cap);
}

FieldRef Field::make(unsigned p, unsigned n, std::vector<unsigned> modulus,
                     std::size_t table_cap) {
    if (!is_prime(p)) throw std::invalid_argument("field: p is not prime");
    if (n < 1) throw std::invalid_argument("field: n must be at least 1");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > table_cap)
            throw std::invalid_argument("field: order p^n exceeds the table cap");
    }

    if (!modulus.empty()) {
        if (modulus.size() != n + 1 || modulus.back() != 1)
            throw std::invalid_argument("field: modulus must be monic of degree n");
        for (unsigned c : modulus)
            if (c >= p) throw std::invalid_argument("field: modulus digit out of range");
        Poly m(modulus.begin(), modulus.end());
        if (!is_irreducible(m, p))
            throw std::invalid_argument("field: modulus is reducible");
    } else {
        // Lexicographically smallest irreducible: scan the lower-digit index.
        for (std::uint64_t v = 0;; ++v) {
            Poly m = monic_from_index(v, n, p);
            if (is_irreducible(m, p)) {
                modulus.assign(m.begin(), m.end());
                break;
            }
            if (v + 1 == q) throw std::logic_error("field: no irreducible found");
        }
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->n_ = n;
    f->q_ = static_cast<Elem>(q);
    f->modulus_ = modulus;

    RawMul raw{p, n, Poly(modulus.begin(), modulus.end()), 0};
    if (p == 2) raw.mod_mask = poly_to_code(raw.modulus, 2);

    // Generator: smallest code of multiplicative order q-1.
    const Elem qm1 = f->q_ - 1;
    const auto factors = prime_factors(qm1);
    Elem g = 0;
    for (Elem c = qm1 == 1 ? 1 : 2; c < f->q_; ++c) {
        bool ok = true;
        for (Elem ell : factors)
            if (raw.pw(c, qm1 / ell) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = c;
            break;
        }
    }
    if (g == 0) throw std::logic_error("field: no generator found");
    f->gen_ = g;

    f->exp_.resize(qm1);
    f->log_.assign(f->q_, 0);
    Elem cur = 1;
    for (Elem i = 0; i < qm1; ++i) {
        f->exp_[i] = cur;
        f->log_[cur] = i;
        cur = raw.mul(cur, g);
    }
    if (cur != 1) throw std::logic_error("field: exp table period mismatch");

    return f;
}

}  // namespace apn
