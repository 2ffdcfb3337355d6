/*
   Copyright 2026 hqmaps contributors

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

#include "hqmaps/quadmap_construct.hpp"

#include "hqmaps/errors.hpp"
#include "hqmaps/fpq.hpp"

namespace hqmaps {

SplitPolyReport build_W(unsigned p) {
    if (p < 1) throw BadParameters("build_W: need p >= 1");
    const unsigned nx = 2 * p + 1;
    const unsigned dim = nx + 2;
    if (dim > Mono::kMaxVars)
        throw CapacityExceeded("build_W: p too large for the fixed variable "
                               "capacity (p <= " +
                               std::to_string((Mono::kMaxVars - 3) / 2) + ")");

    MomentPoly f = fp2_recurrence(2 * p);

    // only even powers of x may arise
    for (const auto& [m, c] : f.terms()) {
        if (m[0] % 2 != 0)
            throw OddPowerPresent("build_W: odd x-power in the base polynomial");
    }
    // x -> -x (flips nothing given the parity assertion; kept explicit)
    MomentPoly flipped(2);
    for (const auto& [m, c] : f.terms())
        flipped.add_term(m, (m[0] % 2 == 0) ? c : -c);

    // move to (X_1..X_nx, Y_1, Y_2): x lives at slot 0, y at slot nx
    MomentPoly W = flipped.with_dim(dim, {0, nx});

    // y -> Y_1 + Y_2
    {
        std::vector<Rational> form(dim, Rational(0));
        form[nx] = 1;
        form[nx + 1] = 1;
        W = W.substitute_affine(nx, Rational(0), form);
    }
    // x -> X_1 + ... + X_nx
    {
        std::vector<Rational> form(dim, Rational(0));
        for (unsigned k = 0; k < nx; ++k) form[k] = 1;
        W = W.substitute_affine(0, Rational(0), form);
    }

    SplitPolyReport rep;
    rep.p = p;
    for (const auto& [m, c] : W.terms()) {
        if (c > 0)
            ++rep.positive_terms;
        else
            ++rep.negative_terms;
    }
    if (rep.negative_terms != nx)
        throw VerificationFailed("build_W: expected " + std::to_string(nx) +
                                 " negative terms, found " +
                                 std::to_string(rep.negative_terms));

    // W = 1 on the plane -sum X + Y_1 + Y_2 = 1: substitute
    // Y_1 = 1 + sum X - Y_2 and require the constant 1
    {
        std::vector<Rational> form(dim, Rational(0));
        for (unsigned k = 0; k < nx; ++k) form[k] = 1;
        form[nx + 1] = -1;
        MomentPoly reduced = W.substitute_affine(nx, Rational(1), form);
        if (!(reduced == MomentPoly::constant(dim, Rational(1))))
            throw VerificationFailed("build_W: W - 1 is not in the plane ideal");
    }

    rep.W = std::move(W);
    return rep;
}

QuadMap build_gp(unsigned p) {
    SplitPolyReport rep = build_W(p);
    QuadMap qm;
    qm.dim = 2 * p + 3;
    qm.exact = true;
    for (const auto& [m, c] : rep.W.terms()) {
        if (c > 0)
            qm.plus_exact.push_back({m, c});
        else
            qm.minus_exact.push_back({m, -c});
    }
    return qm;
}

QuadMapVerification verify_quadmap(const QuadMap& g, unsigned source_pos,
                                   unsigned source_neg) {
    if (!g.exact)
        throw BadParameters("verify_quadmap: map must have exact coefficients");
    unsigned n = g.dim;
    if (source_pos + source_neg != n)
        throw BadParameters("verify_quadmap: source signature does not match "
                            "the variable count");
    if (source_pos < 1)
        throw BadParameters("verify_quadmap: source needs a positive slot");

    MomentPoly s(n);
    for (const auto& comp : g.plus_exact) s.add_term(comp.monomial, comp.coeff_sq);
    for (const auto& comp : g.minus_exact) s.add_term(comp.monomial, -comp.coeff_sq);
    s = s - MomentPoly::constant(n, Rational(1));

    // defining plane: -sum_{j < source_neg} x_j + sum_{j >= source_neg} x_j = 1
    // solve for the last positive variable
    std::vector<Rational> form(n, Rational(0));
    for (unsigned j = 0; j < source_neg; ++j) form[j] = 1;
    for (unsigned j = source_neg; j + 1 < n; ++j) form[j] = -1;
    MomentPoly remainder = s.substitute_affine(n - 1, Rational(1), form);

    QuadMapVerification v;
    v.exact_zero = remainder.is_zero();
    v.remainder = std::move(remainder);
    return v;
}

}  // namespace hqmaps
