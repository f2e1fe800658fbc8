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

#include "abcover/cover.hpp"

#include "abcover/error.hpp"

namespace abcover {

CoverInvariants cover_invariants(const Integer& j_order, const Integer& h_order, int base_genus,
                                 const Integer& split_count) {
    if (j_order < 1 || h_order < 1) throw Error(ErrorKind::MalformedInput, "group orders must be positive");
    if (base_genus < 1) throw Error(ErrorKind::MalformedInput, "base genus must be at least 1");
    if (split_count < 0) throw Error(ErrorKind::MalformedInput, "split count must be nonnegative");
    if (!mpz_divisible_p(j_order.get_mpz_t(), h_order.get_mpz_t()))
        throw Error(ErrorKind::InconsistentOrders,
                    "|H| = " + h_order.get_str() + " does not divide |J_X(K)| = " + j_order.get_str());
    CoverInvariants inv;
    mpz_divexact(inv.quotient_order.get_mpz_t(), j_order.get_mpz_t(), h_order.get_mpz_t());
    inv.base_genus = base_genus;
    inv.cover_genus = 1 + inv.quotient_order * (base_genus - 1);
    inv.split_count = split_count;
    inv.cover_points = inv.quotient_order * split_count;
    return inv;
}

ConstantFieldCover constant_field_cover(const LPolynomial& L) {
    const auto report = validate_weil(L);
    if (!report.valid())
        throw Error(ErrorKind::InvalidWeil, L.to_string() + " failed " + to_string(report.failures.front().check) +
                                                ": " + report.failures.front().reason);
    // Rational points of X_k are exactly the points of X that split in Y.
    const Integer n1 = point_counts(L, 1).values[0];
    if (n1 < 1) throw Error(ErrorKind::NoRationalPoint, "curve has no rational point to split above");

    const LPolynomial lifted = base_change(L, 2);
    ConstantFieldCover out{L.field(), lifted.field(), class_number(lifted), class_number(L), {}};
    out.invariants = cover_invariants(out.j_order, out.h_order, L.genus(), n1);

    // prod(1 - a_i^2) / prod(1 - a_i) = prod(1 + a_i) = L(-1)
    if (out.invariants.quotient_order != evaluate_at(L, -1))
        throw Error(ErrorKind::Internal, "quotient order disagrees with L(-1) for " + L.to_string());
    return out;
}

}  // namespace abcover
