#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mdpcc {

// Element of GF(p^m), stored as the canonical index sum_i rep[i] * p^i of its
// coefficient vector. Two equal elements always have the same index.
struct FieldElement {
    std::uint32_t v = 0;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

// GF(p^m) with an explicit monic irreducible modulus (ascending coefficients,
// length m+1). Prime fields use the modulus z. Immutable after construction;
// all operations are pure. Field sizes are capped at q <= 2^16 so exhaustive
// validation stays feasible.
class Field {
public:
    static constexpr std::uint32_t kMaxFieldSize = 1u << 16;

    static Field prime(std::uint32_t p);
    // Canonical modulus: the monic irreducible whose non-leading coefficient
    // vector has the smallest index value.
    static Field extension(std::uint32_t p, std::uint32_t m);
    static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement element(std::uint64_t index) const;  // index < q
    FieldElement from_int(std::int64_t value) const;  // residue in the prime subfield
    FieldElement from_coeffs(std::span<const std::uint32_t> rep) const;
    std::vector<std::uint32_t> coeffs(FieldElement a) const;  // length m

    bool is_zero(FieldElement a) const { return a.v == 0; }
    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;  // throws on zero
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::int64_t e) const;

    std::string to_string(FieldElement a) const;  // "3" or "(c0,...,cm-1)"

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    std::uint32_t p_ = 2;
    std::uint32_t m_ = 1;
    std::uint32_t q_ = 2;
    std::vector<std::uint32_t> modulus_;
};

bool is_prime(std::uint32_t n);

// Irreducibility over GF(p) by exhaustive trial division. Coefficients are
// ascending; constants and the zero polynomial are reducible by convention.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

// The monic irreducible of degree m over GF(p) whose non-leading coefficient
// vector (c0,...,c_{m-1}) has the smallest value sum c_i p^i. Deterministic.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t m);

}  // namespace mdpcc
