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

// Dense univariate polynomials over Q, just enough for Sturm sequences.

#ifndef ABCOVER_QPOLY_HPP
#define ABCOVER_QPOLY_HPP

#include <gmpxx.h>

#include <span>
#include <utility>
#include <vector>

namespace abcover::detail {

/// Ascending coefficients; the zero polynomial is the empty vector.
using QPoly = std::vector<mpq_class>;

inline void trim(QPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

inline int degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

inline QPoly from_integers(std::span<const mpz_class> coeffs) {
    QPoly f(coeffs.begin(), coeffs.end());
    trim(f);
    return f;
}

inline QPoly derivative(const QPoly& f) {
    QPoly d;
    for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * static_cast<long>(k));
    trim(d);
    return d;
}

/// f = q*g + r with deg r < deg g. g must be nonzero.
inline std::pair<QPoly, QPoly> divmod(QPoly f, const QPoly& g) {
    trim(f);
    QPoly quot;
    if (f.size() >= g.size()) quot.assign(f.size() - g.size() + 1, mpq_class(0));
    while (!f.empty() && f.size() >= g.size()) {
        const std::size_t shift = f.size() - g.size();
        mpq_class c = f.back() / g.back();
        quot[shift] = c;
        for (std::size_t k = 0; k < g.size(); ++k) f[shift + k] -= c * g[k];
        f.pop_back();  // leading term cancels exactly
        trim(f);
    }
    trim(quot);
    return {quot, f};
}

inline void make_monic(QPoly& f) {
    if (f.empty()) return;
    mpq_class lead = f.back();
    for (auto& c : f) c /= lead;
}

/// Scales by a positive rational so the leading coefficient is +-1.
/// Signs at every point are preserved.
inline void normalize_positive(QPoly& f) {
    if (f.empty()) return;
    mpq_class lead = abs(f.back());
    for (auto& c : f) c /= lead;
}

inline QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

inline int sign_at(const QPoly& f, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return sgn(acc);
}

/// Sign of f(s * sqrt(d)) for s in {-1, +1} and d > 0 not a perfect square,
/// evaluated exactly as A + B sqrt(d) with A, B rational.
inline int sign_at_quadratic(const QPoly& f, const mpz_class& d, int s) {
    mpq_class a = 0, b = 0;
    mpz_class dpow = 1;  // d^{floor(k/2)}
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k > 0 && k % 2 == 0) dpow *= d;
        if (k % 2 == 0)
            a += f[k] * dpow;
        else
            b += f[k] * dpow * s;
    }
    const int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
    // Opposite signs: compare a^2 with b^2 d.
    const int cmp_ = cmp(mpq_class(a * a), mpq_class(b * b * d));
    return cmp_ > 0 ? sa : (cmp_ < 0 ? sb : 0);
}

inline std::vector<QPoly> sturm_sequence(const QPoly& f) {
    std::vector<QPoly> seq;
    seq.push_back(f);
    normalize_positive(seq.back());
    QPoly d = derivative(f);
    if (d.empty()) return seq;
    normalize_positive(d);
    seq.push_back(std::move(d));
    while (true) {
        QPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        normalize_positive(r);
        seq.push_back(std::move(r));
    }
    return seq;
}

template <class SignFn>
int sign_variations(const std::vector<QPoly>& seq, SignFn&& sign_of) {
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        const int s = sign_of(p);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace abcover::detail

#endif
