#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace cckit {

class FiniteField;

// An element of GF(p^d), stored as the base-p integer encoding of its
// coefficient vector in the polynomial basis (index 0 is the zero element).
// Elements keep a handle to their field; combining elements of different
// fields throws.
class FieldElement {
public:
    struct Impl; // opaque shared field state

    FieldElement() = default;

    std::int64_t index() const { return idx_; }
    std::vector<std::int64_t> rep() const;
    FiniteField field() const;

    bool is_zero() const { return idx_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::int64_t e) const;
    FieldElement frobenius() const; // x -> x^p

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const;

private:
    friend class FiniteField;
    FieldElement(std::shared_ptr<const Impl> impl, std::int64_t idx)
        : impl_(std::move(impl)), idx_(idx) {}

    std::shared_ptr<const Impl> impl_;
    std::int64_t idx_ = 0;
};

// GF(p^d) with an explicit monic irreducible modulus and a primitive
// element. Construction is deterministic: the modulus is the least monic
// irreducible of degree d (coefficient vectors ordered as base-p integers)
// and the primitive element is the least generator in the same order.
// Immutable after construction; cheap to copy.
class FiniteField {
public:
    static FiniteField build(std::int64_t p, std::int64_t d);

    std::int64_t p() const;
    std::int64_t d() const;
    std::int64_t q() const;
    // Modulus coefficients c_0..c_d, monic (c_d = 1).
    std::vector<std::int64_t> modulus() const;

    FieldElement element(std::int64_t index) const;
    FieldElement from_rep(const std::vector<std::int64_t>& rep) const;
    FieldElement zero() const { return element(0); }
    FieldElement one() const { return element(1); }
    FieldElement primitive_element() const;

    // All q elements in index order.
    std::vector<FieldElement> elements() const;

    bool operator==(const FiniteField& o) const;
    bool operator!=(const FiniteField& o) const { return !(*this == o); }

private:
    friend class FieldElement;
    std::shared_ptr<const FieldElement::Impl> impl_;
};

// Orbit of a under the Frobenius map x -> x^p, sorted by element index.
std::vector<FieldElement> frobenius_orbit(const FieldElement& a);

// The unique subgroup of F^x of the given index, i.e. the powers of
// xi^index; sorted by element index. index must divide q-1.
std::vector<FieldElement> multiplicative_subgroup(const FiniteField& field, std::int64_t index);

} // namespace cckit
