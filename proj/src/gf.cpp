#include "cckit/gf.hpp"

#include <algorithm>
#include <numeric>

#include "cckit/errors.hpp"

namespace cckit {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// Polynomials over GF(p): coefficient vectors, lowest degree first,
// normalized to have no trailing zeros.
using Poly = std::vector<std::int64_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::int64_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::int64_t& c = a[shift + i];
                c = ((c - lead * m[i]) % p + p) % p;
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() <= dm) break;
    }
    trim(a);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
    return poly_mod(poly_mul(a, b, p), m, p);
}

Poly poly_from_index(std::int64_t idx, std::int64_t p) {
    Poly f;
    while (idx > 0) {
        f.push_back(idx % p);
        idx /= p;
    }
    return f;
}

std::int64_t poly_to_index(const Poly& f, std::int64_t p) {
    std::int64_t idx = 0;
    for (std::size_t i = f.size(); i-- > 0;) idx = idx * p + f[i];
    return idx;
}

// Irreducibility by trial division by every monic polynomial of degree
// 1..deg/2.
bool is_irreducible(const Poly& f, std::int64_t p) {
    const std::int64_t deg = static_cast<std::int64_t>(f.size()) - 1;
    if (deg <= 0) return false;
    if (deg == 1) return true;
    for (std::int64_t e = 1; 2 * e <= deg; ++e) {
        std::int64_t count = 1;
        for (std::int64_t i = 0; i < e; ++i) count *= p;
        for (std::int64_t low = 0; low < count; ++low) {
            Poly g = poly_from_index(low, p);
            g.resize(static_cast<std::size_t>(e) + 1, 0);
            g[static_cast<std::size_t>(e)] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> fs;
    for (std::int64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            fs.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

struct FieldElement::Impl {
    std::int64_t p = 0;
    std::int64_t d = 0;
    std::int64_t q = 0;
    Poly modulus;          // degree d, monic
    std::int64_t xi = 0;   // index of the primitive element
    // Discrete log tables: exp_[e] = index of xi^e for e in [0, q-1);
    // log_[idx] = e for nonzero idx.
    std::vector<std::int64_t> exp_;
    std::vector<std::int64_t> log_;

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t r = 0, mul = 1;
        while (a > 0 || b > 0) {
            std::int64_t da = a % p, db = b % p;
            r += ((da + db) % p) * mul;
            a /= p;
            b /= p;
            mul *= p;
        }
        return r;
    }

    std::int64_t neg(std::int64_t a) const {
        std::int64_t r = 0, mul = 1;
        while (a > 0) {
            std::int64_t da = a % p;
            r += (da == 0 ? 0 : p - da) * mul;
            a /= p;
            mul *= p;
        }
        return r;
    }

    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q - 1)];
    }

    std::int64_t inv(std::int64_t a) const {
        if (a == 0) throw Error("division by zero in finite field");
        return exp_[(q - 1 - log_[a]) % (q - 1)];
    }

    std::int64_t pow_idx(std::int64_t a, std::int64_t e) const {
        if (a == 0) {
            if (e < 0) throw Error("division by zero in finite field");
            return e == 0 ? 1 : 0;
        }
        std::int64_t ord = q - 1;
        std::int64_t ee = ((e % ord) + ord) % ord;
        return exp_[(log_[a] * ee) % ord];
    }

    std::int64_t frob(std::int64_t a) const { return pow_idx(a, p); }
};

namespace {

void check_same_field(const FieldElement::Impl* a, const FieldElement::Impl* b) {
    if (a == nullptr || b == nullptr) throw Error("uninitialized field element");
    if (a == b) return;
    if (a->p != b->p || a->d != b->d || a->modulus != b->modulus)
        throw Error("field elements belong to different fields");
}

} // namespace

std::vector<std::int64_t> FieldElement::rep() const {
    if (!impl_) throw Error("uninitialized field element");
    Poly f = poly_from_index(idx_, impl_->p);
    f.resize(static_cast<std::size_t>(impl_->d), 0);
    return f;
}

FiniteField FieldElement::field() const {
    if (!impl_) throw Error("uninitialized field element");
    FiniteField f;
    f.impl_ = impl_;
    return f;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(impl_.get(), o.impl_.get());
    return FieldElement(impl_, impl_->add(idx_, o.idx_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(impl_.get(), o.impl_.get());
    return FieldElement(impl_, impl_->add(idx_, impl_->neg(o.idx_)));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(impl_.get(), o.impl_.get());
    return FieldElement(impl_, impl_->mul(idx_, o.idx_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_field(impl_.get(), o.impl_.get());
    return FieldElement(impl_, impl_->mul(idx_, impl_->inv(o.idx_)));
}

FieldElement FieldElement::operator-() const {
    if (!impl_) throw Error("uninitialized field element");
    return FieldElement(impl_, impl_->neg(idx_));
}

FieldElement FieldElement::inverse() const {
    if (!impl_) throw Error("uninitialized field element");
    return FieldElement(impl_, impl_->inv(idx_));
}

FieldElement FieldElement::pow(std::int64_t e) const {
    if (!impl_) throw Error("uninitialized field element");
    return FieldElement(impl_, impl_->pow_idx(idx_, e));
}

FieldElement FieldElement::frobenius() const {
    if (!impl_) throw Error("uninitialized field element");
    return FieldElement(impl_, impl_->frob(idx_));
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_field(impl_.get(), o.impl_.get());
    return idx_ == o.idx_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    check_same_field(impl_.get(), o.impl_.get());
    return idx_ < o.idx_;
}

FiniteField FiniteField::build(std::int64_t p, std::int64_t d) {
    if (!is_prime(p)) throw Error("field characteristic must be prime, got " + std::to_string(p));
    if (d < 1) throw Error("extension degree must be at least 1");

    // q = p^d with overflow check.
    std::int64_t q = 1;
    for (std::int64_t i = 0; i < d; ++i) {
        if (q > (std::int64_t{1} << 62) / p)
            throw Error("field order p^d exceeds the exact integer range");
        q *= p;
    }
    // dense exp/log tables cap the practical size
    if (q > (std::int64_t{1} << 22))
        throw Error("field order " + std::to_string(q) + " exceeds the dense-table limit 2^22");

    auto impl = std::make_shared<FieldElement::Impl>();
    impl->p = p;
    impl->d = d;
    impl->q = q;

    // Least monic irreducible of degree d, ordering the non-leading
    // coefficient vector as a base-p integer.
    std::int64_t low_count = q; // p^d choices of the lower coefficients
    for (std::int64_t low = 0; low < low_count; ++low) {
        Poly f = poly_from_index(low, p);
        f.resize(static_cast<std::size_t>(d) + 1, 0);
        f[static_cast<std::size_t>(d)] = 1;
        if (is_irreducible(f, p)) {
            impl->modulus = f;
            break;
        }
    }
    if (impl->modulus.empty()) throw Error("no irreducible modulus found"); // unreachable

    // Least element generating the multiplicative group.
    auto factors = prime_factors(q - 1);
    auto order_is_full = [&](std::int64_t idx) {
        Poly a = poly_from_index(idx, p);
        for (std::int64_t f : factors) {
            // a^((q-1)/f) by square-and-multiply over polynomials
            std::int64_t e = (q - 1) / f;
            Poly acc = {1};
            Poly base = a;
            while (e > 0) {
                if (e & 1) acc = poly_mulmod(acc, base, impl->modulus, p);
                base = poly_mulmod(base, base, impl->modulus, p);
                e >>= 1;
            }
            if (acc.size() == 1 && acc[0] == 1) return false;
        }
        return true;
    };
    std::int64_t xi = -1;
    if (q == 2) {
        xi = 1; // trivial group, 1 generates it
    } else {
        for (std::int64_t idx = 1; idx < q; ++idx) {
            if (order_is_full(idx)) {
                xi = idx;
                break;
            }
        }
    }
    if (xi < 0) throw Error("no primitive element found"); // unreachable
    impl->xi = xi;

    impl->exp_.resize(static_cast<std::size_t>(q - 1));
    impl->log_.assign(static_cast<std::size_t>(q), -1);
    Poly cur = {1};
    Poly gen = poly_from_index(xi, p);
    for (std::int64_t e = 0; e < q - 1; ++e) {
        std::int64_t idx = poly_to_index(cur, p);
        impl->exp_[static_cast<std::size_t>(e)] = idx;
        impl->log_[static_cast<std::size_t>(idx)] = e;
        cur = poly_mulmod(cur, gen, impl->modulus, p);
    }

    FiniteField field;
    field.impl_ = std::move(impl);
    return field;
}

std::int64_t FiniteField::p() const { return impl_->p; }
std::int64_t FiniteField::d() const { return impl_->d; }
std::int64_t FiniteField::q() const { return impl_->q; }
std::vector<std::int64_t> FiniteField::modulus() const { return impl_->modulus; }

FieldElement FiniteField::element(std::int64_t index) const {
    if (index < 0 || index >= impl_->q) throw Error("element index out of range");
    return FieldElement(impl_, index);
}

FieldElement FiniteField::from_rep(const std::vector<std::int64_t>& rep) const {
    if (static_cast<std::int64_t>(rep.size()) > impl_->d)
        throw Error("coefficient vector longer than the extension degree");
    std::int64_t idx = 0;
    for (std::size_t i = rep.size(); i-- > 0;) {
        if (rep[i] < 0 || rep[i] >= impl_->p) throw Error("coefficient out of range [0,p)");
        idx = idx * impl_->p + rep[i];
    }
    return FieldElement(impl_, idx);
}

FieldElement FiniteField::primitive_element() const { return FieldElement(impl_, impl_->xi); }

std::vector<FieldElement> FiniteField::elements() const {
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(impl_->q));
    for (std::int64_t i = 0; i < impl_->q; ++i) out.emplace_back(FieldElement(impl_, i));
    return out;
}

bool FiniteField::operator==(const FiniteField& o) const {
    return impl_->p == o.impl_->p && impl_->d == o.impl_->d && impl_->modulus == o.impl_->modulus;
}

std::vector<FieldElement> frobenius_orbit(const FieldElement& a) {
    std::vector<FieldElement> orbit;
    FieldElement cur = a;
    do {
        orbit.push_back(cur);
        cur = cur.frobenius();
    } while (cur != a);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<FieldElement> multiplicative_subgroup(const FiniteField& field, std::int64_t index) {
    std::int64_t n = field.q() - 1;
    if (index <= 0 || n % index != 0)
        throw Error("subgroup index " + std::to_string(index) + " does not divide q-1 = " + std::to_string(n));
    std::vector<FieldElement> sub;
    FieldElement g = field.primitive_element().pow(index);
    FieldElement cur = field.one();
    for (std::int64_t j = 0; j < n / index; ++j) {
        sub.push_back(cur);
        cur = cur * g;
    }
    std::sort(sub.begin(), sub.end());
    return sub;
}

} // namespace cckit
