#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fqlab {

inline constexpr std::uint64_t kDefaultFieldCap = 1'000'000;

/// An element of GF(p^e), stored as its canonical index sum_i c_i p^i where c_i is the
/// coefficient of the i-th power of the basis root. The index doubles as the element's
/// position in the field's enumeration order, so zero is 0 and one is 1.
struct Element {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

struct FieldOptions {
    std::uint64_t cap = kDefaultFieldCap;
};

enum class ArithOp { Add, Sub, Mul, Inv };

/// GF(p^e) for an odd prime p, realised as Z_p[X]/(modulus). Immutable; copies share tables.
class Field {
public:
    std::uint32_t p() const noexcept;
    std::uint32_t e() const noexcept;
    std::uint32_t q() const noexcept;

    /// Monic modulus, low-degree coefficient first (length e + 1).
    const std::vector<std::uint32_t>& modulus() const noexcept;
    std::string modulus_string() const;

    Element zero() const noexcept { return Element{0}; }
    Element one() const noexcept { return Element{1}; }
    bool contains(Element x) const noexcept { return x.index < q(); }

    Element from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Element x) const;
    /// Image of the integer n under Z -> Z_p -> GF(q).
    Element from_integer(std::int64_t n) const noexcept;

    Element add(Element a, Element b) const noexcept;
    Element sub(Element a, Element b) const noexcept;
    Element neg(Element a) const noexcept;
    Element add_one(Element a) const noexcept;
    Element mul(Element a, Element b) const noexcept;
    Element inv(Element a) const;
    /// Square-and-multiply; x^0 = 1 for every x, including zero.
    Element pow(Element x, std::uint64_t n) const noexcept;

    /// Product by polynomial multiplication and reduction modulo the modulus. Slow path used
    /// to build the log tables; exposed so tests can check the fast path against it.
    Element mul_schoolbook(Element a, Element b) const;

    /// The primitive element used for the internal log tables.
    Element generator() const noexcept;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    struct Tables;
    explicit Field(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}
    std::shared_ptr<const Tables> tables_;

    friend Field construct_field(std::uint32_t p, std::uint32_t e, const FieldOptions& options);
};

bool is_prime(std::uint64_t n) noexcept;

/// Monic polynomial over Z_p (low-degree coefficient first) has no nontrivial factorization.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

/// Smallest monic irreducible of degree e, comparing coefficients from the constant term up.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t e);

Field construct_field(std::uint32_t p, std::uint32_t e, const FieldOptions& options = {});

/// Builds GF(q) after factoring q = p^e.
Field field_of_order(std::uint64_t q, const FieldOptions& options = {});

Element field_arith(const Field& field, ArithOp op, Element a, Element b);
Element field_pow(const Field& field, Element x, std::uint64_t n);
std::vector<Element> enumerate_elements(const Field& field);

}  // namespace fqlab
