// Exact arithmetic for multivariate integer Laurent polynomials and for
// elements of the group ring of H = Z^v x (Z_2 or trivial).
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rplink {

using Coeff = mpz_class;
using Exponents = std::vector<int>;

// A signed monomial image of a single variable, used by substitute().
struct SignedMonomial {
    int sign = 1;  // +1 or -1
    Exponents exponents;
};

// Unit of Z[t1^±1,...,tn^±1]: sign * t^monomial. Composition multiplies
// signs and adds exponent vectors.
struct UnitClass {
    int sign = 1;
    Exponents monomial;

    UnitClass() = default;
    UnitClass(int s, Exponents m) : sign(s), monomial(std::move(m)) {}
    static UnitClass identity(int num_vars) { return UnitClass(1, Exponents(num_vars, 0)); }
    UnitClass compose(const UnitClass& other) const;
    bool operator==(const UnitClass&) const = default;
};

// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
// Invariant: no stored zero coefficients; all exponent vectors have length
// num_vars(). Immutable in practice: every operation returns a new value.
class MultiLaurent {
public:
    MultiLaurent() = default;
    explicit MultiLaurent(int num_vars) : num_vars_(num_vars) {}

    static MultiLaurent constant(int num_vars, Coeff c);
    static MultiLaurent monomial(int num_vars, const Exponents& e, Coeff c);
    static MultiLaurent variable(int num_vars, int index, int power = 1);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Exponents, Coeff>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Coefficient of an exponent vector (zero when absent).
    Coeff coeff(const Exponents& e) const;

    void add_term(const Exponents& e, const Coeff& c);

    bool operator==(const MultiLaurent&) const = default;

    MultiLaurent& operator+=(const MultiLaurent& rhs);
    MultiLaurent& operator-=(const MultiLaurent& rhs);
    MultiLaurent& operator*=(const MultiLaurent& rhs);

    friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
    friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
    friend MultiLaurent operator-(const MultiLaurent& a);

private:
    int num_vars_ = 0;
    std::map<Exponents, Coeff> terms_;
};

// Canonical representative of the +-monomial unit class: minimum exponent of
// every variable shifted to 0, leading (lexicographically largest exponent
// vector) coefficient positive. Returns (canonical, unit) with
// input == unit.sign * t^unit.monomial * canonical. Idempotent.
std::pair<MultiLaurent, UnitClass> canonicalize(const MultiLaurent& a);

bool equal_up_to_unit(const MultiLaurent& a, const MultiLaurent& b);

// Greatest common divisor in the UFD Z[t1^±1,...,tn^±1], returned in
// canonical unit form. gcd(a,0) = canonicalize(a), gcd(0,0) = 0.
MultiLaurent gcd(const MultiLaurent& a, const MultiLaurent& b);

// Exact quotient a/b, or nullopt when b does not divide a. b must be nonzero.
std::optional<MultiLaurent> divide_exact(const MultiLaurent& a, const MultiLaurent& b);

// Ring homomorphism determined by per-variable signed monomial images into a
// ring with out_vars variables.
MultiLaurent substitute(const MultiLaurent& a, const std::vector<SignedMonomial>& images,
                        int out_vars);

// For one-variable p, the pair (r, s) with p(1/t) = s * t^r * p(t), if it
// exists; (0, +1) for p = 0.
std::optional<std::pair<int, int>> symmetry_exponent(const MultiLaurent& p);

// Evaluate a one-variable polynomial at t = 1.
Coeff eval_at_one(const MultiLaurent& p);

// Exact determinant of a square matrix of Laurent polynomials. Rows are
// cleared to polynomial form first and the cleared monomial is tracked as a
// unit; cofactor expansion up to 3x3, fraction-free Bareiss elimination above.
MultiLaurent det_fraction_free(const std::vector<std::vector<MultiLaurent>>& m);

// Monomial of H: exponent vector over the free part and a torsion bit.
struct HMonomial {
    int sign = 1;
    Exponents exponents;
    int torsion_bit = 0;  // 0 or 1; must be 0 when the ambient H has no torsion
};

// Element of Z[H], H = Z^v x (Z_2 when has_torsion). Term keys are
// (exponent vector, torsion bit); no stored zero coefficients.
class GroupRingElem {
public:
    GroupRingElem() = default;
    GroupRingElem(int num_vars, bool has_torsion) : num_vars_(num_vars), has_torsion_(has_torsion) {}

    static GroupRingElem monomial(int num_vars, bool has_torsion, const HMonomial& m,
                                  Coeff c = Coeff(1));
    static GroupRingElem one(int num_vars, bool has_torsion);

    int num_vars() const { return num_vars_; }
    bool has_torsion() const { return has_torsion_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Exponents, int>, Coeff>& terms() const { return terms_; }

    void add_term(const Exponents& e, int bit, const Coeff& c);

    bool operator==(const GroupRingElem&) const = default;

    GroupRingElem& operator+=(const GroupRingElem& rhs);
    friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator-(const GroupRingElem& a);

private:
    int num_vars_ = 0;
    bool has_torsion_ = false;
    std::map<std::pair<Exponents, int>, Coeff> terms_;
};

// Ring homomorphism Z[H] -> Z[t1^±1,...,tm^±1]: each free variable goes to a
// signed monomial, the torsion bit to torsion_sign (+1 or -1).
MultiLaurent substitute(const GroupRingElem& a, const std::vector<SignedMonomial>& images,
                        int out_vars, int torsion_sign);

// One-variable rational representative: numerator / (t-1)^denom_power.
// Stored reduced: a numerator divisible by (t-1) is divided out, zero
// numerator forces denom_power = 0.
struct TorsionFn {
    MultiLaurent numerator{1};
    int denom_power = 0;

    bool operator==(const TorsionFn&) const = default;
};

TorsionFn make_torsion_fn(MultiLaurent numerator, int denom_power);

// Same layout over (t - 1/t)^denom_power; the value type of the normalized
// function. Numerator symmetry n(1/t) = ± t^k n(t) survives normalization.
struct NablaFn {
    MultiLaurent numerator{1};
    int denom_power = 0;

    bool operator==(const NablaFn&) const = default;
};

NablaFn make_nabla_fn(MultiLaurent numerator, int denom_power);

// Text syntax used across I/O and tests: terms like "-2*t1^-3*t2 + 1",
// variables "t" (one variable) or "t1".."tn", torsion symbol "u".
std::string print_poly(const MultiLaurent& p);
MultiLaurent parse_poly(const std::string& text, int num_vars);
std::string print_group_ring(const GroupRingElem& e);
std::string print_unit(const UnitClass& u);

}  // namespace rplink
