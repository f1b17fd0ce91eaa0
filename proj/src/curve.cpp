#include "ggk/curve.hpp"

namespace ggk {

namespace {

Int checked_mul(Int a, Int b) {
    Int out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw InvalidParameters("curve numerology overflows 64-bit integers");
    return out;
}

Int checked_add(Int a, Int b) {
    Int out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw InvalidParameters("curve numerology overflows 64-bit integers");
    return out;
}

Int checked_sub(Int a, Int b) {
    Int out = 0;
    if (__builtin_sub_overflow(a, b, &out)) throw InvalidParameters("curve numerology overflows 64-bit integers");
    return out;
}

}  // namespace

Int checked_pow(Int base, Int exp) {
    Int out = 1;
    for (Int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

PrimePower prime_power(Int q) noexcept {
    if (q < 2) return {};
    Int p = q;
    for (Int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    Int s = 0;
    Int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++s;
    }
    if (rest != 1) return {};
    return {p, s};
}

CurveParams new_curve(Int q, Int e) {
    if (q < 2) throw InvalidParameters("q must be at least 2, got " + std::to_string(q));
    if (prime_power(q).p == 0) throw InvalidParameters("q must be a prime power, got " + std::to_string(q));
    if (e < 1) throw InvalidParameters("e must be at least 1, got " + std::to_string(e));
    if (e % 2 == 0) throw InvalidParameters("e must be odd, got " + std::to_string(e));

    CurveParams c;
    c.q = q;
    c.e = e;

    const Int qe = checked_pow(q, e);
    const Int qe1 = checked_add(qe, 1);
    if (qe1 % (q + 1) != 0) throw InvalidParameters("q + 1 does not divide q^e + 1");
    c.r = qe1 / (q + 1);

    // (q-1)(q^(e+1) + q^e - q^2) / 2
    const Int inner = checked_sub(checked_add(checked_pow(q, e + 1), qe), q * q);
    c.genus = checked_mul(q - 1, inner) / 2;

    // q^(2e+2) - q^(e+3) + q^(e+2) + 1
    const Int q2e2 = checked_pow(q, 2 * e + 2);
    const Int qe3 = checked_pow(q, e + 3);
    const Int qe2 = checked_pow(q, e + 2);
    c.n_places = checked_add(checked_add(checked_sub(q2e2, qe3), qe2), 1);
    c.n = c.n_places - 2;

    c.gen_x = qe1;
    c.gen_y = checked_mul(q, c.r);
    c.gen_z = checked_pow(q, 3);

    // q^3 (q^(2e-1) - q^e + q^(e-1))
    const Int zf_deg = checked_add(checked_sub(checked_pow(q, 2 * e - 1), qe), checked_pow(q, e - 1));
    c.w_deg = checked_mul(c.gen_z, zf_deg);

    c.m_dual = checked_add(c.n, checked_sub(checked_mul(2, c.genus), 1));
    c.m_dual_printed =
        checked_sub(checked_add(checked_sub(checked_add(checked_sub(q2e2, qe3), checked_mul(2, qe2)), qe), q * q), 1);
    return c;
}

}  // namespace ggk
