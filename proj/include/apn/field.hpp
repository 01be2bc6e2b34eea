#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apn {

/// Canonical element code: an integer in 0..q-1 whose base-p digits are the
/// polynomial-basis coordinates. For p=2 the code is the usual bitstring.
using Elem = std::uint32_t;

class Field;
using FieldRef = std::shared_ptr<const Field>;

/// A concrete finite field F_{p^n} with a fixed monic irreducible modulus.
///
/// Immutable after construction; every operation is pure and safe to call
/// concurrently. Multiplication and inversion go through log/exp tables over
/// a fixed generator, addition is digit-wise mod p (XOR for p=2).
class Field {
public:
    static constexpr std::size_t kDefaultTableCap = std::size_t{1} << 22;

    /// Build F_{p^n} with the lexicographically smallest monic irreducible
    /// modulus (low-to-high digit order; deterministic, no bundled tables).
    static FieldRef make(unsigned p, unsigned n,
                         std::size_t table_cap = kDefaultTableCap);

    /// Build F_{p^n} with an explicit modulus, given as its n+1 coefficients
    /// c_0..c_n (low to high, c_n = 1). Throws if the modulus is reducible.
    static FieldRef make(unsigned p, unsigned n, std::vector<unsigned> modulus,
                         std::size_t table_cap = kDefaultTableCap);

    unsigned p() const { return p_; }
    unsigned n() const { return n_; }
    Elem q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }
    Elem generator() const { return gen_; }

    Elem add(Elem a, Elem b) const {
        return p_ == 2 ? (a ^ b) : add_digits(a, b);
    }
    Elem neg(Elem a) const { return p_ == 2 ? a : neg_digits(a); }
    Elem sub(Elem a, Elem b) const { return p_ == 2 ? (a ^ b) : add_digits(a, neg_digits(b)); }

    /// Multiply by a prime-subfield scalar c in 0..p-1 (digit-wise).
    Elem scalar_mul(Elem a, unsigned c) const;

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_wrap(std::uint64_t(log_[a]) + log_[b]);
    }
    Elem inv(Elem a) const {
        if (a == 0) throw std::invalid_argument("field: inversion of zero");
        return exp_wrap(std::uint64_t(q_) - 1 - log_[a]);
    }
    Elem pow(Elem x, std::uint64_t e) const {
        if (x == 0) return e == 0 ? 1 : 0;
        return exp_wrap(std::uint64_t(log_[x]) * (e % (q_ - 1)));
    }

    /// exp(i) = g^i (period q-1); log(x) defined for x != 0, log(g^i) = i.
    Elem exp(std::uint64_t i) const { return exp_wrap(i); }
    std::uint32_t log(Elem x) const {
        if (x == 0) throw std::invalid_argument("field: log of zero");
        return log_[x];
    }

    /// x^(p^t), the t-fold Frobenius.
    Elem frobenius(Elem x, unsigned t) const;

    /// Relative trace into the subfield F_{p^t}: sum of x^(p^(t*k)) for
    /// k = 0..n/t-1. Requires t | n. The result lies in F_{p^t}; for t = 1
    /// it is a prime-subfield constant, i.e. a code below p.
    Elem trace_relative(Elem x, unsigned t) const;

    /// True iff x is a cube. For q = 1 (mod 3) and x != 0 this is
    /// x^((q-1)/3) = 1; otherwise cubing is a bijection and every element
    /// is a cube.
    bool is_cube(Elem x) const;

    /// The subfield of order p^m as a sorted code list: {x : x^(p^m) = x}.
    /// Requires m | n.
    std::vector<Elem> subfield_elements(unsigned m) const;

    /// Dual basis of {u1, u2} for F_{p^n} over F_{p^m}, m = n/2 (n even).
    /// Returns (v1, v2) with Tr_{p^n/p^m}(u_i v_j) = delta_ij. Throws if
    /// {u1, u2} is not a basis, i.e. u1*u2^(p^m) - u1^(p^m)*u2 = 0.
    std::pair<Elem, Elem> dual_basis(Elem u1, Elem u2) const;

    /// Single-line field record "p n c_0 c_1 ... c_n" (used in file headers).
    std::string record() const;

    /// Parse a field record line (the inverse of record()).
    static FieldRef parse_record(const std::string& line,
                                 std::size_t table_cap = kDefaultTableCap);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field() = default;

    Elem exp_wrap(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }
    Elem add_digits(Elem a, Elem b) const;
    Elem neg_digits(Elem a) const;

    unsigned p_ = 0;
    unsigned n_ = 0;
    Elem q_ = 0;
    Elem gen_ = 0;
    std::vector<unsigned> modulus_;      // c_0..c_n, monic
    std::vector<Elem> exp_;              // size q-1, exp_[i] = g^i
    std::vector<std::uint32_t> log_;     // size q, log_[0] unused
};

}  // namespace apn
