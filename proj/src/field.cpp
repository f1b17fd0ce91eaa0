#include "ggk/field.hpp"

#include <string>

namespace ggk {

namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of a modulo the monic b over F_p.
Poly poly_rem(Poly a, std::span<const std::uint32_t> b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

bool is_zero(const Poly& a) {
    for (const auto v : a) {
        if (v != 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t f = 2; f * f <= v; ++f) {
        if (v % f == 0) {
            out.push_back(f);
            while (v % f == 0) v /= f;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
    const std::size_t deg = poly.size() - 1;
    for (std::size_t fd = 1; fd <= deg / 2; ++fd) {
        // all monic polynomials of degree fd
        std::size_t count = 1;
        for (std::size_t i = 0; i < fd; ++i) count *= p;
        for (std::size_t idx = 0; idx < count; ++idx) {
            Poly f(fd + 1, 0);
            f[fd] = 1;
            std::size_t rest = idx;
            for (std::size_t i = 0; i < fd; ++i) {
                f[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (is_zero(poly_rem(Poly(poly.begin(), poly.end()), f, p))) return false;
        }
    }
    return true;
}

SmallField::SmallField(std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> modulus)
    : p_(p), d_(d), order_(1), modulus_(std::move(modulus)) {
    if (p < 2 || d < 1) throw std::invalid_argument("field needs p >= 2 and d >= 1");
    for (std::uint32_t i = 0; i < d; ++i) {
        if (static_cast<std::uint64_t>(order_) * p > kMaxOrder) {
            throw FieldTooLarge("field order " + std::to_string(p) + "^" + std::to_string(d) + " exceeds 2^16");
        }
        order_ *= p;
    }
    if (modulus_.size() != d + 1 || modulus_.back() != 1) throw std::invalid_argument("modulus must be monic of degree d");
    for (const auto coef : modulus_) {
        if (coef >= p) throw std::invalid_argument("modulus coefficient out of range");
    }
    if (!is_irreducible(p, modulus_)) throw std::invalid_argument("modulus is reducible");

    neg_.resize(order_);
    for (Elem a = 0; a < order_; ++a) {
        Elem out = 0;
        Elem place = 1;
        for (Elem rest = a; rest != 0; rest /= p) {
            out += ((p - rest % p) % p) * place;
            place *= p;
        }
        neg_[a] = out;
    }
    if (p != 2 && order_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(order_) * order_);
        for (Elem a = 0; a < order_; ++a) {
            for (Elem b = 0; b < order_; ++b) add_table_[static_cast<std::size_t>(a) * order_ + b] = add_digits(a, b);
        }
    }

    // Smallest element whose powers exhaust the multiplicative group.
    const std::uint32_t group = order_ - 1;
    const auto factors = prime_factors(group);
    auto slow_pow = [&](Elem base, std::uint32_t k) {
        Elem acc = 1;
        while (k != 0) {
            if (k & 1u) acc = mul_poly(acc, base);
            base = mul_poly(base, base);
            k >>= 1;
        }
        return acc;
    };
    Elem gen = 0;
    for (Elem cand = 2; cand < order_ && gen == 0; ++cand) {
        bool primitive = true;
        for (const auto f : factors) {
            if (slow_pow(cand, group / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) gen = cand;
    }
    if (order_ == 2) gen = 1;
    if (gen == 0) throw std::logic_error("no primitive element found");

    exp_.resize(2 * static_cast<std::size_t>(group));
    log_.assign(order_, 0);
    Elem acc = 1;
    for (std::uint32_t k = 0; k < group; ++k) {
        exp_[k] = acc;
        exp_[k + group] = acc;
        log_[acc] = k;
        acc = mul_poly(acc, gen);
    }
}

Elem SmallField::add_digits(Elem a, Elem b) const noexcept {
    Elem out = 0;
    Elem place = 1;
    while (a != 0 || b != 0) {
        out += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

Elem SmallField::mul_poly(Elem a, Elem b) const noexcept {
    Poly x(d_, 0);
    Poly y(d_, 0);
    for (std::uint32_t i = 0; i < d_; ++i, a /= p_, b /= p_) {
        x[i] = a % p_;
        y[i] = b % p_;
    }
    Poly prod(2 * d_ - 1, 0);
    for (std::uint32_t i = 0; i < d_; ++i) {
        for (std::uint32_t j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    const Poly r = poly_rem(std::move(prod), modulus_, p_);
    Elem out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
    return out;
}

Elem SmallField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("zero has no inverse");
    return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
}

Elem SmallField::pow(Elem a, Int k) const {
    if (a == 0) {
        if (k < 0) throw std::domain_error("zero raised to a negative power");
        return k == 0 ? 1 : 0;
    }
    const Int group = order_ - 1;
    const Int e = euclid(static_cast<Int>(log_[a]) * euclid(k, group), group);
    return exp_[static_cast<std::size_t>(e)];
}

SmallField make_field(const CurveParams& c) {
    const PrimePower pp = prime_power(c.q);
    const auto p = static_cast<std::uint32_t>(pp.p);
    const Int d = pp.s * 2 * c.e;
    Int order = 1;
    for (Int i = 0; i < d; ++i) {
        order *= pp.p;
        if (order > SmallField::kMaxOrder) {
            throw FieldTooLarge("F_{q^(2e)} for q=" + std::to_string(c.q) + ", e=" + std::to_string(c.e) +
                                " exceeds 2^16 elements");
        }
    }
    const auto deg = static_cast<std::uint32_t>(d);

    if (p == 2 && deg == 2) return SmallField(2, 2, {1, 1, 1});
    if (p == 3 && deg == 2) return SmallField(3, 2, {1, 0, 1});
    if (p == 2 && deg == 6) return SmallField(2, 6, {1, 1, 0, 0, 0, 0, 1});

    Poly poly(deg + 1, 0);
    poly[deg] = 1;
    for (;;) {
        if (poly[0] != 0 && is_irreducible(p, poly)) return SmallField(p, deg, poly);
        std::size_t i = 0;
        while (i < deg && ++poly[i] == p) poly[i++] = 0;
        if (i == deg) throw std::logic_error("no irreducible polynomial found");
    }
}

}  // namespace ggk
