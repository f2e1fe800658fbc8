/*
   Copyright 2026 The abcover Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ABCOVER_LPOLY_HPP
#define ABCOVER_LPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace abcover {

using Integer = mpz_class;

/// Cardinality q = p^f of a finite field.
class FieldSize {
   public:
    /// Factors q; throws Error(NotPrimePower) unless q = p^f with p prime, f >= 1.
    static FieldSize from_cardinality(const Integer& q);
    static FieldSize from_cardinality(std::uint64_t q) { return from_cardinality(Integer(q)); }

    const Integer& q() const noexcept { return q_; }
    const Integer& p() const noexcept { return p_; }
    unsigned f() const noexcept { return f_; }

    /// Cardinality of the degree-d extension.
    FieldSize extension(unsigned d) const;

    std::string to_string() const { return q_.get_str(); }

    friend bool operator==(const FieldSize& a, const FieldSize& b) { return a.q_ == b.q_; }
    friend bool operator<(const FieldSize& a, const FieldSize& b) { return a.q_ < b.q_; }

   private:
    FieldSize(Integer q, Integer p, unsigned f) : q_(std::move(q)), p_(std::move(p)), f_(f) {}

    Integer q_;
    Integer p_;
    unsigned f_;
};

/// Numerator L(t) = a_0 + a_1 t + ... + a_{2g} t^{2g} of the zeta function
/// of a curve of genus g over F_q, stored with exact integer coefficients.
///
/// The constructor only enforces the shape (odd length >= 3, a_0 = 1). The
/// functional equation a_{2g-i} = q^{g-i} a_i is guaranteed for values built
/// by complete_from_half and checked by validate_weil otherwise.
class LPolynomial {
   public:
    LPolynomial(FieldSize field, std::vector<Integer> coefficients);

    const FieldSize& field() const noexcept { return field_; }
    int genus() const noexcept { return static_cast<int>(coeffs_.size() / 2); }
    std::span<const Integer> coefficients() const noexcept { return coeffs_; }
    const Integer& operator[](std::size_t k) const { return coeffs_.at(k); }

    bool satisfies_functional_equation() const;

    /// "[1,3,8,...]"
    std::string to_string() const;

    friend bool operator==(const LPolynomial& a, const LPolynomial& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

   private:
    FieldSize field_;
    std::vector<Integer> coeffs_;
};

/// Power sums p_k = sum_i alpha_i^k of the reciprocal roots, k = 1..m.
struct PowerSums {
    FieldSize field;
    int genus;
    std::vector<Integer> values;  // values[k-1] = p_k
};

/// N_d = q^d + 1 - p_d, d = 1..m.
struct PointCounts {
    FieldSize field;
    int genus;
    std::vector<Integer> values;  // values[d-1] = N_d
};

/// Completes a_1..a_g with the functional equation.
LPolynomial complete_from_half(const FieldSize& field, int genus, std::span<const Integer> half);

Integer evaluate_at(const LPolynomial& L, const Integer& t);

/// Newton's identities; exact.
PowerSums power_sums(const LPolynomial& L, int count);

/// Inverse Newton recursion using the first 2g power sums. Throws
/// Error(InexactDivision) if some k does not divide its numerator.
LPolynomial coefficients_from_power_sums(const PowerSums& sums);

PointCounts point_counts(const LPolynomial& L, int count);

/// |J(F_q)| = L(1). Throws Error(NonPositiveClassNumber) if L(1) <= 0.
Integer class_number(const LPolynomial& L);

/// L-polynomial of the same curve over F_{q^d}.
LPolynomial base_change(const LPolynomial& L, unsigned degree);

/// Monic degree-g integer polynomial (ascending coefficients) whose roots are
/// alpha_i + q/alpha_i. Throws Error(FunctionalEquation) if L is not symmetric.
std::vector<Integer> real_weil_polynomial(const LPolynomial& L);

/// Number of real roots of the integer polynomial h (ascending coefficients),
/// counted with multiplicity, lying in the closed interval [-2 sqrt(q), 2 sqrt(q)].
int count_roots_in_weil_interval(std::span<const Integer> h, const Integer& q);

/// Closed points of degree d: b_d = (1/d) sum_{e|d} mu(d/e) N_e.
/// Throws Error(InexactDivision) if some b_d is not an integer.
std::vector<Integer> place_counts(const PointCounts& counts);

struct ValidationOptions {
    /// Largest degree d for which b_d >= 0 is checked; 0 means 2g.
    int max_place_degree = 0;
};

struct ValidationFailure {
    enum class Check { FunctionalEquation, RootLocation, Plausibility };
    Check check;
    std::string reason;
};

const char* to_string(ValidationFailure::Check check) noexcept;

struct ValidationReport {
    bool functional_equation_ok = false;
    bool root_location_ok = false;
    bool plausibility_ok = false;
    std::vector<ValidationFailure> failures;

    bool valid() const noexcept { return functional_equation_ok && root_location_ok && plausibility_ok; }
};

ValidationReport validate_weil(const LPolynomial& L, const ValidationOptions& options = {});

}  // namespace abcover

#endif
