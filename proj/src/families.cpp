#include "apn/families.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <stdexcept>

#include "apn/expr.hpp"

namespace apn::families {
namespace {

void require_binary(const Field& F, const char* who) {
    if (F.p() != 2) throw std::invalid_argument(std::string(who) + ": p must be 2");
}

void require_nonzero(Elem a, const char* who) {
    if (a == 0) throw std::invalid_argument(std::string(who) + ": a must be nonzero");
}

BivariateMap tabulate_pair(const FieldRef& half,
                           const std::function<Elem(Elem, Elem)>& g,
                           const std::function<Elem(Elem, Elem)>& h) {
    const Elem qh = half->q();
    BivariateMap bv{half, std::vector<Elem>(std::size_t(qh) * qh),
                    std::vector<Elem>(std::size_t(qh) * qh)};
    for (Elem x = 0; x < qh; ++x)
        for (Elem y = 0; y < qh; ++y) {
            bv.g[bv.pair_code(x, y)] = g(x, y);
            bv.h[bv.pair_code(x, y)] = h(x, y);
        }
    return bv;
}

}  // namespace

MapTable gold(const FieldRef& field, unsigned k) {
    require_binary(*field, "gold");
    if (std::gcd(k, field->n()) != 1)
        std::cerr << "warning: gold exponent 2^" << k << "+1 with gcd(k, n) = "
                  << std::gcd(k, field->n()) << " != 1; the map is not APN\n";
    const std::uint64_t e = (std::uint64_t(1) << k) + 1;
    return tabulate(field, [&](Elem x) { return field->pow(x, e); });
}

MapTable cube_plus_trace(const FieldRef& field) {
    require_binary(*field, "cube_plus_trace");
    const Field& F = *field;
    return tabulate(field, [&](Elem x) {
        return F.add(F.pow(x, 3), F.trace_relative(F.pow(x, 9), 1));
    });
}

MapTable cube_trace_2to1(const FieldRef& field, Elem a) {
    require_binary(*field, "cube_trace_2to1");
    require_nonzero(a, "cube_trace_2to1");
    if (field->n() % 2 == 0)
        throw std::invalid_argument("cube_trace_2to1: n must be odd");
    const Field& F = *field;
    const Elem ai = F.inv(a), a3 = F.pow(a, 3);
    return tabulate(field, [&](Elem x) {
        return F.add(F.pow(x, 3), F.mul(ai, F.trace_relative(F.mul(a3, F.pow(x, 9)), 1)));
    });
}

namespace {

MapTable budaghyan_impl(const FieldRef& field, Elem a, bool squared, bool substituted) {
    const char* who = "budaghyan";
    require_binary(*field, who);
    require_nonzero(a, who);
    if (field->n() % 3 != 0)
        throw std::invalid_argument(std::string(who) + ": n must be divisible by 3");
    const Field& F = *field;
    const Elem ai = F.inv(a), a3 = F.pow(a, 3), a6 = F.pow(a, 6);
    const auto base = [&](Elem x) {
        const Elem arg = F.add(F.mul(a3, F.pow(x, 3)), F.mul(a6, F.pow(x, 6)));
        Elem t = F.trace_relative(arg, 3);
        if (squared) t = F.mul(t, t);
        return F.add(x, F.mul(ai, t));
    };
    if (!substituted) return tabulate(field, base);
    return tabulate(field, [&](Elem x) { return base(F.pow(x, 3)); });
}

}  // namespace

MapTable budaghyan_f1(const FieldRef& field, Elem a) {
    return budaghyan_impl(field, a, false, true);
}
MapTable budaghyan_f2(const FieldRef& field, Elem a) {
    return budaghyan_impl(field, a, true, true);
}
MapTable budaghyan_base_f1(const FieldRef& field, Elem a) {
    return budaghyan_impl(field, a, false, false);
}
MapTable budaghyan_base_f2(const FieldRef& field, Elem a) {
    return budaghyan_impl(field, a, true, false);
}

namespace {

void zhou_pott_checks(const Field& half, unsigned i, unsigned k, Elem alpha) {
    require_binary(half, "zhou_pott");
    const unsigned m = half.n();
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("zhou_pott: m must be even and at least 2");
    if (i < 2 || i % 2 != 0)
        throw std::invalid_argument("zhou_pott: i must be even and at least 2");
    if (std::gcd(k, m) != 1)
        throw std::invalid_argument("zhou_pott: gcd(k, m) must be 1");
    if (half.is_cube(alpha))
        throw std::invalid_argument("zhou_pott: alpha must not be a cube");
}

}  // namespace

BivariateMap zhou_pott_f(const FieldRef& half, unsigned i, unsigned k, Elem alpha) {
    zhou_pott_checks(*half, i, k, alpha);
    const Field& S = *half;
    const std::uint64_t e1 = (std::uint64_t(1) << k) + 1;
    const std::uint64_t e2 = e1 << i;
    return tabulate_pair(
        half,
        [&](Elem x, Elem y) { return S.add(S.pow(x, e1), S.mul(alpha, S.pow(y, e2))); },
        [&](Elem x, Elem y) { return S.mul(x, y); });
}

BivariateMap zhou_pott_g(const FieldRef& half, unsigned i, unsigned k, Elem alpha) {
    zhou_pott_checks(*half, i, k, alpha);
    const Field& S = *half;
    const unsigned m = S.n();
    const std::uint64_t e1 = (std::uint64_t(1) << k) + 1;
    const std::uint64_t eh = std::uint64_t(1) << ((m - (i % m)) % m);
    return tabulate_pair(
        half,
        [&](Elem x, Elem y) { return S.add(S.pow(x, e1), S.mul(alpha, S.pow(y, e1))); },
        [&](Elem x, Elem y) { return S.mul(x, S.pow(y, eh)); });
}

BivariateMap gologlu_f1(const FieldRef& half, unsigned k) {
    require_binary(*half, "gologlu_f1");
    if (std::gcd(3 * k, half->n()) != 1)
        throw std::invalid_argument("gologlu_f1: gcd(3k, m) must be 1");
    const Field& S = *half;
    const std::uint64_t ek = std::uint64_t(1) << k;
    const std::uint64_t e2k = std::uint64_t(1) << (2 * k);
    return tabulate_pair(
        half,
        [&](Elem x, Elem y) {
            return S.add(S.add(S.pow(x, ek + 1), S.mul(x, S.pow(y, ek))), S.pow(y, ek + 1));
        },
        [&](Elem x, Elem y) {
            return S.add(S.add(S.pow(x, e2k + 1), S.mul(S.pow(x, e2k), y)),
                         S.pow(y, e2k + 1));
        });
}

BivariateMap gologlu_f2(const FieldRef& half, unsigned k) {
    require_binary(*half, "gologlu_f2");
    if (std::gcd(3 * k, half->n()) != 1)
        throw std::invalid_argument("gologlu_f2: gcd(3k, m) must be 1");
    if (half->n() % 2 != 1)
        throw std::invalid_argument("gologlu_f2: m must be odd");
    const Field& S = *half;
    const std::uint64_t ek = std::uint64_t(1) << k;
    const std::uint64_t e3k = std::uint64_t(1) << (3 * k);
    return tabulate_pair(
        half,
        [&](Elem x, Elem y) {
            return S.add(S.add(S.pow(x, ek + 1), S.mul(x, S.pow(y, ek))), S.pow(y, ek + 1));
        },
        [&](Elem x, Elem y) {
            return S.add(S.mul(S.pow(x, e3k), y), S.mul(x, S.pow(y, e3k)));
        });
}

MapTable trace_switched_apn(const FieldRef& field, Elem alpha, Elem beta, Elem gamma) {
    require_binary(*field, "trace_switched_apn");
    const Field& F = *field;
    if (F.n() % 2 != 0)
        throw std::invalid_argument("trace_switched_apn: n must be even");
    if (alpha == 0 || beta == 0 || gamma == 0)
        throw std::invalid_argument("trace_switched_apn: alpha, beta, gamma must be nonzero");
    if (F.trace_relative(F.mul(beta, alpha), 1) != 1)
        throw std::invalid_argument("trace_switched_apn: Tr(beta*alpha) must be 1");
    std::vector<char> image(F.q(), 0);
    for (Elem x = 0; x < F.q(); ++x)
        image[F.add(F.mul(x, x), F.mul(alpha, x))] = 1;
    if (image[gamma])
        throw std::invalid_argument(
            "trace_switched_apn: gamma lies in the image of x^2 + alpha*x");

    const Elem ai3 = F.inv(F.pow(alpha, 3));
    const auto base = [&](Elem x) {
        const Elem t =
            F.trace_relative(F.add(F.mul(ai3, F.pow(x, 3)), F.mul(beta, x)), 1);
        return F.add(F.add(F.mul(x, x), F.mul(alpha, x)), F.mul(gamma, t));
    };
    std::vector<char> hit(F.q(), 0);
    for (Elem x = 0; x < F.q(); ++x) {
        const Elem y = base(x);
        if (hit[y]) throw std::logic_error("trace_switched_apn: base map is not a permutation");
        hit[y] = 1;
    }
    return tabulate(field, [&](Elem x) { return base(F.pow(x, 3)); });
}

std::optional<std::array<Elem, 3>> find_switched_params(const FieldRef& field) {
    const Field& F = *field;
    if (F.p() != 2 || F.n() % 2 != 0) return std::nullopt;
    std::vector<char> image(F.q());
    for (Elem alpha = 1; alpha < F.q(); ++alpha) {
        std::fill(image.begin(), image.end(), 0);
        for (Elem x = 0; x < F.q(); ++x)
            image[F.add(F.mul(x, x), F.mul(alpha, x))] = 1;
        for (Elem beta = 1; beta < F.q(); ++beta) {
            if (F.trace_relative(F.mul(beta, alpha), 1) != 1) continue;
            for (Elem gamma = 1; gamma < F.q(); ++gamma)
                if (!image[gamma]) return std::array<Elem, 3>{alpha, beta, gamma};
        }
    }
    return std::nullopt;
}

MapTable named_example(const std::string& id) {
    if (id == "min7")
        return from_expression(Field::make(2, 7), "x^3+x^64+x^16+x^4");
    if (id == "min11")
        return from_expression(Field::make(2, 11), "x^3+x^256");
    if (id == "dobbertin-g2") {
        // exponent 2^8 + 2^6 + 2^4 + 2^2 - 1 = 339 on F_2^10
        const FieldRef f = Field::make(2, 10);
        return tabulate(f, [&](Elem x) { return f->pow(x, 339); });
    }
    throw std::invalid_argument("named_example: unknown id '" + id + "'");
}

std::vector<std::string> named_example_ids() {
    return {"min7", "min11", "dobbertin-g2"};
}

}  // namespace apn::families
