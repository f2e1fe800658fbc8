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

#include "abcover/lpoly.hpp"

#include <sstream>

#include "abcover/error.hpp"
#include "qpoly.hpp"

namespace abcover {

namespace {

Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

}  // namespace

FieldSize FieldSize::from_cardinality(const Integer& q) {
    if (q < 2) throw Error(ErrorKind::NotPrimePower, q.get_str() + " is not a prime power");
    const auto bits = static_cast<unsigned>(mpz_sizeinbase(q.get_mpz_t(), 2));
    // Largest exponent first, so the first exact prime root is the prime base.
    for (unsigned f = bits; f >= 1; --f) {
        Integer r;
        if (mpz_root(r.get_mpz_t(), q.get_mpz_t(), f) == 0) continue;
        if (mpz_probab_prime_p(r.get_mpz_t(), 40) > 0) return FieldSize(q, r, f);
    }
    throw Error(ErrorKind::NotPrimePower, q.get_str() + " is not a prime power");
}

FieldSize FieldSize::extension(unsigned d) const {
    if (d == 0) throw Error(ErrorKind::MalformedInput, "extension degree must be positive");
    return FieldSize(pow(q_, d), p_, f_ * d);
}

LPolynomial::LPolynomial(FieldSize field, std::vector<Integer> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
    if (coeffs_.size() < 3 || coeffs_.size() % 2 == 0)
        throw Error(ErrorKind::MalformedInput, "an L-polynomial needs 2g+1 coefficients with g >= 1");
    if (coeffs_.front() != 1) throw Error(ErrorKind::MalformedInput, "constant coefficient of L must be 1");
}

bool LPolynomial::satisfies_functional_equation() const {
    const int g = genus();
    for (int i = 0; i <= g; ++i)
        if (coeffs_[2 * g - i] != pow(field_.q(), g - i) * coeffs_[i]) return false;
    return true;
}

std::string LPolynomial::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < coeffs_.size(); ++k) os << (k ? "," : "") << coeffs_[k];
    os << ']';
    return os.str();
}

LPolynomial complete_from_half(const FieldSize& field, int genus, std::span<const Integer> half) {
    if (genus < 1) throw Error(ErrorKind::MalformedInput, "genus must be at least 1");
    if (half.size() != static_cast<std::size_t>(genus))
        throw Error(ErrorKind::MalformedInput, "coefficient count mismatch: expected " + std::to_string(genus) +
                                                   ", got " + std::to_string(half.size()));
    std::vector<Integer> a(2 * genus + 1);
    a[0] = 1;
    for (int i = 1; i <= genus; ++i) a[i] = half[i - 1];
    for (int i = 0; i < genus; ++i) a[2 * genus - i] = pow(field.q(), genus - i) * a[i];
    return LPolynomial(field, std::move(a));
}

Integer evaluate_at(const LPolynomial& L, const Integer& t) {
    Integer acc = 0;
    const auto a = L.coefficients();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * t + *it;
    return acc;
}

PowerSums power_sums(const LPolynomial& L, int count) {
    if (count < 1) throw Error(ErrorKind::MalformedInput, "power sum count must be positive");
    const auto a = L.coefficients();
    const int top = 2 * L.genus();
    // With e_k = (-1)^k a_k, Newton's identity collapses to
    // p_k = -(k a_k + sum_{i=1}^{k-1} a_i p_{k-i}), a_k = 0 beyond 2g.
    std::vector<Integer> p(count + 1);
    for (int k = 1; k <= count; ++k) {
        Integer s = k <= top ? Integer(a[k] * k) : Integer(0);
        for (int i = 1; i < k && i <= top; ++i) s += a[i] * p[k - i];
        p[k] = -s;
    }
    p.erase(p.begin());
    return {L.field(), L.genus(), std::move(p)};
}

LPolynomial coefficients_from_power_sums(const PowerSums& sums) {
    const int top = 2 * sums.genus;
    if (sums.genus < 1 || sums.values.size() < static_cast<std::size_t>(top))
        throw Error(ErrorKind::MalformedInput, "need at least 2g power sums");
    const auto& p = sums.values;
    std::vector<Integer> a(top + 1);
    a[0] = 1;
    for (int k = 1; k <= top; ++k) {
        Integer s = p[k - 1];
        for (int i = 1; i < k; ++i) s += a[i] * p[k - i - 1];
        if (!mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(k)))
            throw Error(ErrorKind::InexactDivision,
                        "power sums are not realizable: coefficient " + std::to_string(k) + " is not integral");
        mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(k));
        a[k] = -s;
    }
    return LPolynomial(sums.field, std::move(a));
}

PointCounts point_counts(const LPolynomial& L, int count) {
    PowerSums ps = power_sums(L, count);
    std::vector<Integer> n(count);
    Integer qd = 1;
    for (int d = 1; d <= count; ++d) {
        qd *= L.field().q();
        n[d - 1] = qd + 1 - ps.values[d - 1];
    }
    return {L.field(), L.genus(), std::move(n)};
}

Integer class_number(const LPolynomial& L) {
    Integer h = evaluate_at(L, 1);
    if (h <= 0)
        throw Error(ErrorKind::NonPositiveClassNumber, "L(1) = " + h.get_str() + " is not a valid class number");
    return h;
}

LPolynomial base_change(const LPolynomial& L, unsigned degree) {
    if (degree == 0) throw Error(ErrorKind::MalformedInput, "base change degree must be positive");
    if (degree == 1) return L;
    const int g = L.genus();
    PowerSums all = power_sums(L, 2 * g * static_cast<int>(degree));
    PowerSums lifted{L.field().extension(degree), g, {}};
    lifted.values.reserve(2 * g);
    for (int k = 1; k <= 2 * g; ++k) lifted.values.push_back(all.values[k * degree - 1]);
    try {
        return coefficients_from_power_sums(lifted);
    } catch (const Error& e) {
        throw Error(ErrorKind::Internal, std::string("base change produced non-integral coefficients: ") + e.what());
    }
}

std::vector<Integer> real_weil_polynomial(const LPolynomial& L) {
    if (!L.satisfies_functional_equation())
        throw Error(ErrorKind::FunctionalEquation, "L-polynomial " + L.to_string() + " violates the functional equation");
    const int g = L.genus();
    const Integer& q = L.field().q();
    const auto a = L.coefficients();
    // x^{-g} P(x) = a_g + sum_j a_{g-j} (x^j + (q/x)^j) and x^j + (q/x)^j = D_j(y)
    // for y = x + q/x, where D_0 = 2, D_1 = y, D_j = y D_{j-1} - q D_{j-2}.
    std::vector<Integer> h(g + 1, 0);
    h[0] = a[g];
    std::vector<Integer> prev{2}, cur{0, 1};
    for (int j = 1; j <= g; ++j) {
        for (std::size_t k = 0; k < cur.size(); ++k) h[k] += a[g - j] * cur[k];
        std::vector<Integer> next(cur.size() + 1, 0);
        for (std::size_t k = 0; k < cur.size(); ++k) next[k + 1] += cur[k];
        for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= q * prev[k];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return h;
}

int count_roots_in_weil_interval(std::span<const Integer> h, const Integer& q) {
    using namespace detail;
    QPoly f = from_integers(h);
    if (f.empty()) throw Error(ErrorKind::MalformedInput, "zero polynomial has no finite root count");
    const Integer bound_sq = 4 * q;  // (2 sqrt q)^2
    int on_boundary = 0;
    const bool rational_bound = mpz_perfect_square_p(bound_sq.get_mpz_t()) != 0;
    Integer c;
    mpz_sqrt(c.get_mpz_t(), bound_sq.get_mpz_t());

    // Strip roots at +-2 sqrt(q) so that Sturm counts an open interval whose
    // endpoints are not roots.
    if (rational_bound) {
        for (int s : {1, -1}) {
            const mpq_class x = mpq_class(c * s);
            while (degree(f) >= 1 && sign_at(f, x) == 0) {
                f = divmod(f, QPoly{-x, 1}).first;
                ++on_boundary;
            }
        }
    } else {
        const QPoly quad{mpq_class(-bound_sq), 0, 1};
        while (degree(f) >= 2) {
            auto [quot, rem] = divmod(f, quad);
            if (!rem.empty()) break;
            f = std::move(quot);
            on_boundary += 2;
        }
    }

    auto sign_of = [&](int s) {
        return [&, s](const QPoly& p) {
            return rational_bound ? sign_at(p, mpq_class(c * s)) : sign_at_quadratic(p, bound_sq, s);
        };
    };

    // Roots of multiplicity m appear once in each of f, gcd(f, f'), ... (m times).
    int interior = 0;
    QPoly cur = f;
    while (degree(cur) >= 1) {
        const auto seq = sturm_sequence(cur);
        interior += sign_variations(seq, sign_of(-1)) - sign_variations(seq, sign_of(1));
        cur = gcd(cur, derivative(cur));
    }
    return on_boundary + interior;
}

std::vector<Integer> place_counts(const PointCounts& counts) {
    const auto& n = counts.values;
    std::vector<Integer> b(n.size());
    for (std::size_t d = 1; d <= n.size(); ++d) {
        Integer s = 0;
        for (std::size_t e = 1; e <= d; ++e) {
            if (d % e != 0) continue;
            const int mu = moebius(static_cast<int>(d / e));
            if (mu != 0) s += n[e - 1] * mu;
        }
        if (!mpz_divisible_ui_p(s.get_mpz_t(), d))
            throw Error(ErrorKind::InexactDivision,
                        "number of degree-" + std::to_string(d) + " places is not an integer");
        mpz_divexact_ui(b[d - 1].get_mpz_t(), s.get_mpz_t(), d);
    }
    return b;
}

const char* to_string(ValidationFailure::Check check) noexcept {
    switch (check) {
        case ValidationFailure::Check::FunctionalEquation: return "functional_equation";
        case ValidationFailure::Check::RootLocation: return "root_location";
        case ValidationFailure::Check::Plausibility: return "plausibility";
    }
    return "unknown";
}

ValidationReport validate_weil(const LPolynomial& L, const ValidationOptions& options) {
    using Check = ValidationFailure::Check;
    ValidationReport report;
    const int g = L.genus();

    report.functional_equation_ok = L.satisfies_functional_equation();
    if (!report.functional_equation_ok) {
        report.failures.push_back({Check::FunctionalEquation, "a_{2g-i} != q^{g-i} a_i for some i"});
        report.failures.push_back({Check::RootLocation, "not checked: functional equation violated"});
    } else {
        const auto h = real_weil_polynomial(L);
        const int inside = count_roots_in_weil_interval(h, L.field().q());
        report.root_location_ok = inside == g;
        if (!report.root_location_ok)
            report.failures.push_back({Check::RootLocation, "only " + std::to_string(inside) + " of " +
                                                                 std::to_string(g) +
                                                                 " real Weil roots lie in [-2sqrt(q), 2sqrt(q)]"});
    }

    const int max_degree = options.max_place_degree > 0 ? options.max_place_degree : 2 * g;
    const PointCounts counts = point_counts(L, max_degree);
    report.plausibility_ok = true;
    if (counts.values[0] < 0) {
        report.plausibility_ok = false;
        report.failures.push_back({Check::Plausibility, "N_1 = " + counts.values[0].get_str() + " is negative"});
    }
    try {
        const auto places = place_counts(counts);
        for (std::size_t d = 1; d < places.size(); ++d) {  // b_1 = N_1, reported above
            if (places[d] >= 0) continue;
            report.plausibility_ok = false;
            report.failures.push_back({Check::Plausibility, "b_" + std::to_string(d + 1) + " = " +
                                                                places[d].get_str() + " is negative"});
        }
    } catch (const Error& e) {
        report.plausibility_ok = false;
        report.failures.push_back({Check::Plausibility, e.what()});
    }
    return report;
}

}  // namespace abcover
