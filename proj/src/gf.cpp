#include "fqlab/gf.hpp"

#include <algorithm>
#include <sstream>

#include "fqlab/error.hpp"

namespace fqlab {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-degree first, trimmed

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // p is prime: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t n = p - 2; n; n >>= 1) {
        if (n & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = inv_mod_p(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t factor = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = factor * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t n, const Poly& m, std::uint32_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), m, p);
    for (; n; n >>= 1) {
        if (n & 1) result = poly_mulmod(result, base, m, p);
        base = poly_mulmod(base, base, m, p);
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::uint64_t checked_power(std::uint64_t p, std::uint32_t e, std::uint64_t cap) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (q > cap / p) {
            throw Error(ErrorKind::CapExceeded,
                        std::to_string(p) + "^" + std::to_string(e) + " exceeds field cap " +
                            std::to_string(cap));
        }
        q *= p;
    }
    return q;
}

}  // namespace

struct Field::Tables {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t q = 0;
    Poly modulus;
    std::vector<std::uint32_t> place;  // p^i
    Element generator;
    std::vector<std::uint32_t> exp;  // generator^i, length 2(q-1)
    std::vector<std::uint32_t> log;  // log[0] unused
};

std::uint32_t Field::p() const noexcept { return tables_->p; }
std::uint32_t Field::e() const noexcept { return tables_->e; }
std::uint32_t Field::q() const noexcept { return tables_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return tables_->modulus; }
Element Field::generator() const noexcept { return tables_->generator; }

std::string Field::modulus_string() const {
    std::ostringstream out;
    bool first = true;
    const auto& m = tables_->modulus;
    for (std::size_t d = m.size(); d-- > 0;) {
        if (m[d] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (d == 0) {
            out << m[d];
            continue;
        }
        if (m[d] != 1) out << m[d] << "*";
        out << "X";
        if (d > 1) out << "^" << d;
    }
    if (first) out << "0";
    return out.str();
}

Element Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > tables_->e) {
        throw Error(ErrorKind::LengthMismatch, "coefficient vector longer than the extension degree");
    }
    std::uint32_t index = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= tables_->p) {
            throw Error(ErrorKind::ParamDomain, "coefficient outside {0, ..., p-1}");
        }
        index += coeffs[i] * tables_->place[i];
    }
    return Element{index};
}

std::vector<std::uint32_t> Field::coeffs(Element x) const {
    std::vector<std::uint32_t> out(tables_->e);
    std::uint32_t v = x.index;
    for (auto& c : out) {
        c = v % tables_->p;
        v /= tables_->p;
    }
    return out;
}

Element Field::from_integer(std::int64_t n) const noexcept {
    const auto p = static_cast<std::int64_t>(tables_->p);
    return Element{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Element Field::add(Element a, Element b) const noexcept {
    const std::uint32_t p = tables_->p;
    if (tables_->e == 1) return Element{(a.index + b.index) % p};
    std::uint32_t x = a.index, y = b.index, out = 0;
    for (std::uint32_t i = 0; i < tables_->e; ++i) {
        out += ((x % p + y % p) % p) * tables_->place[i];
        x /= p;
        y /= p;
    }
    return Element{out};
}

Element Field::neg(Element a) const noexcept {
    const std::uint32_t p = tables_->p;
    if (tables_->e == 1) return Element{(p - a.index) % p};
    std::uint32_t x = a.index, out = 0;
    for (std::uint32_t i = 0; i < tables_->e; ++i) {
        out += ((p - x % p) % p) * tables_->place[i];
        x /= p;
    }
    return Element{out};
}

Element Field::sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

Element Field::add_one(Element a) const noexcept {
    const std::uint32_t c0 = a.index % tables_->p;
    return Element{c0 + 1 == tables_->p ? a.index - c0 : a.index + 1};
}

Element Field::mul(Element a, Element b) const noexcept {
    if (a.index == 0 || b.index == 0) return zero();
    const auto& t = *tables_;
    return Element{t.exp[t.log[a.index] + t.log[b.index]]};
}

Element Field::inv(Element a) const {
    if (a.index == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const auto& t = *tables_;
    const std::uint32_t l = t.log[a.index];
    return Element{t.exp[l == 0 ? 0 : (t.q - 1) - l]};
}

Element Field::pow(Element x, std::uint64_t n) const noexcept {
    Element result = one();
    for (; n; n >>= 1) {
        if (n & 1) result = mul(result, x);
        x = mul(x, x);
    }
    return result;
}

Element Field::mul_schoolbook(Element a, Element b) const {
    Poly pa = coeffs(a), pb = coeffs(b);
    trim(pa);
    trim(pb);
    Poly r = poly_mulmod(pa, pb, tables_->modulus, tables_->p);
    r.resize(tables_->e, 0);
    return from_coeffs(r);
}

bool operator==(const Field& a, const Field& b) noexcept {
    return a.tables_ == b.tables_ ||
           (a.p() == b.p() && a.e() == b.e() && a.modulus() == b.modulus());
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
    Poly f(monic.begin(), monic.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t degree = f.size() - 1;
    if (degree == 1) return true;
    // Rabin: gcd(f, X^(p^i) - X) = 1 for i = 1..degree/2.
    Poly x_power{0, 1};
    for (std::size_t i = 1; i <= degree / 2; ++i) {
        x_power = poly_powmod(x_power, p, f, p);
        Poly diff = x_power;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(f, diff, p).size() != 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t e) {
    // Counter n enumerates (c_0, ..., c_{e-1}) with c_0 as the most significant digit.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    Poly candidate(e + 1, 0);
    candidate[e] = 1;
    for (std::uint64_t n = 0; n < count; ++n) {
        std::uint64_t v = n;
        for (std::uint32_t i = e; i-- > 0;) {
            candidate[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (is_irreducible(candidate, p)) return candidate;
    }
    throw Error(ErrorKind::ParamDomain, "no irreducible polynomial found");
}

Field construct_field(std::uint32_t p, std::uint32_t e, const FieldOptions& options) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (p == 2) throw Error(ErrorKind::EvenPrime, "characteristic 2 is not supported");
    if (e < 1) throw Error(ErrorKind::ParamDomain, "extension degree must be at least 1");
    const std::uint64_t q = checked_power(p, e, std::min<std::uint64_t>(options.cap, UINT32_MAX / 2));

    auto tables = std::make_shared<Field::Tables>();
    tables->p = p;
    tables->e = e;
    tables->q = static_cast<std::uint32_t>(q);
    tables->modulus = smallest_irreducible(p, e);
    tables->place.resize(e);
    for (std::uint32_t i = 0, v = 1; i < e; ++i, v *= p) tables->place[i] = v;

    // Log tables need a primitive element; candidates are tried in enumeration order.
    Field slow(tables);
    const std::uint32_t order = tables->q - 1;
    std::vector<std::uint32_t> powers(order);
    for (std::uint32_t candidate = 1; candidate < tables->q; ++candidate) {
        const Element g{candidate};
        Element cur = slow.one();
        bool primitive = true;
        for (std::uint32_t i = 0; i < order; ++i) {
            if (i > 0 && cur == slow.one()) {
                primitive = false;
                break;
            }
            powers[i] = cur.index;
            cur = slow.mul_schoolbook(cur, g);
        }
        if (!primitive) continue;
        tables->generator = g;
        tables->exp.resize(2 * static_cast<std::size_t>(order));
        tables->log.assign(tables->q, 0);
        for (std::uint32_t i = 0; i < order; ++i) {
            tables->exp[i] = tables->exp[i + order] = powers[i];
            tables->log[powers[i]] = i;
        }
        return Field(std::move(tables));
    }
    throw Error(ErrorKind::ParamDomain, "no primitive element found");
}

Field field_of_order(std::uint64_t q, const FieldOptions& options) {
    if (q < 2) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;
    std::uint64_t rest = q;
    std::uint32_t e = 0;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    if (p == 2) throw Error(ErrorKind::EvenPrime, std::to_string(q) + " has characteristic 2");
    if (q > options.cap) {
        throw Error(ErrorKind::CapExceeded,
                    std::to_string(q) + " exceeds field cap " + std::to_string(options.cap));
    }
    return construct_field(static_cast<std::uint32_t>(p), e, options);
}

Element field_arith(const Field& field, ArithOp op, Element a, Element b) {
    switch (op) {
        case ArithOp::Add: return field.add(a, b);
        case ArithOp::Sub: return field.sub(a, b);
        case ArithOp::Mul: return field.mul(a, b);
        case ArithOp::Inv: return field.inv(a);
    }
    throw Error(ErrorKind::ParamDomain, "unknown arithmetic op");
}

Element field_pow(const Field& field, Element x, std::uint64_t n) { return field.pow(x, n); }

std::vector<Element> enumerate_elements(const Field& field) {
    std::vector<Element> out(field.q());
    for (std::uint32_t i = 0; i < field.q(); ++i) out[i] = Element{i};
    return out;
}

}  // namespace fqlab
