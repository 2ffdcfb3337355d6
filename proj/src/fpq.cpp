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

#include "hqmaps/fpq.hpp"

#include <vector>

#include "hqmaps/cyclotomic.hpp"
#include "hqmaps/errors.hpp"

namespace hqmaps {

namespace {

using Int128 = __int128;

BigInt to_bigint(Int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    BigInt b(static_cast<unsigned long>(u >> 64));
    b <<= 64;
    b += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    return neg ? BigInt(-b) : b;
}

// Bivariate product prod_{k<p} (1 - t^k x - t^{qk} y) with coefficients in
// the group ring Z[t]/(t^p - 1); multiplication by t^m is a cyclic shift.
// The l1 norm of the coefficients is bounded by 3^p, which fits __int128
// for p <= 80.
template <typename Int>
std::vector<std::vector<std::vector<Int>>> group_ring_product(unsigned p, unsigned q) {
    std::vector<std::vector<std::vector<Int>>> grid(
        p + 1, std::vector<std::vector<Int>>(p + 1));
    for (unsigned i = 0; i <= p; ++i)
        for (unsigned j = 0; i + j <= p; ++j) grid[i][j].assign(p, Int(0));
    grid[0][0][0] = Int(1);

    for (unsigned k = 0; k < p; ++k) {
        unsigned sx = k % p;                                  // shift for the x factor
        unsigned sy = (static_cast<unsigned long>(q) * k) % p;  // shift for the y factor
        // total degree descending, so the lower cells read this step are
        // still the previous step's values
        for (unsigned s = k + 1; s >= 1; --s) {
            for (unsigned i = (s > p ? s - p : 0); i <= s && i <= p; ++i) {
                unsigned j = s - i;
                if (j > p || i + j > p) continue;
                auto& cell = grid[i][j];
                if (i >= 1) {
                    const auto& src = grid[i - 1][j];
                    for (unsigned r = 0; r < p; ++r)
                        cell[(r + sx) % p] -= src[r];
                }
                if (j >= 1) {
                    const auto& src = grid[i][j - 1];
                    for (unsigned r = 0; r < p; ++r)
                        cell[(r + sy) % p] -= src[r];
                }
            }
        }
    }
    return grid;
}

// Reduce an element of Z[t]/(t^p - 1) modulo the p-th cyclotomic polynomial
// and require the result to be a rational integer.
BigInt integer_image(std::vector<BigInt> v, unsigned p, const Mono& where) {
    const auto& phi = cyclotomic_polynomial(p);
    const size_t d = phi.size() - 1;
    for (size_t i = v.size(); i-- > d;) {
        if (v[i] == 0) continue;
        BigInt c = v[i];
        v[i] = 0;
        for (size_t j = 0; j < d; ++j)
            if (phi[j] != 0) v[i - d + j] -= c * phi[j];
    }
    for (size_t i = 1; i < d && i < v.size(); ++i) {
        if (v[i] != 0)
            throw NonIntegerCoefficient("fpq_compute: non-integer coefficient at " +
                                        where.str());
    }
    return v[0];
}

template <typename Int>
MomentPoly assemble_fpq(unsigned p, unsigned q) {
    auto grid = group_ring_product<Int>(p, q);
    MomentPoly f(2);
    for (unsigned i = 0; i <= p; ++i) {
        for (unsigned j = 0; i + j <= p; ++j) {
            std::vector<BigInt> v(p);
            for (unsigned r = 0; r < p; ++r) {
                if constexpr (std::is_same_v<Int, BigInt>) {
                    v[r] = grid[i][j][r];
                } else {
                    v[r] = to_bigint(grid[i][j][r]);
                }
            }
            // f = 1 - product
            Mono m(2, {i, j});
            BigInt c = -integer_image(std::move(v), p, m);
            if (i == 0 && j == 0) c += 1;
            if (c != 0) f.add_term(m, Rational(c));
        }
    }
    return f;
}

void verify_unit_on_plane(const MomentPoly& f, unsigned p, unsigned q) {
    // f(x, 1-x) must be identically 1
    MomentPoly g = f.substitute_affine(1, Rational(1), {Rational(-1), Rational(0)});
    MomentPoly one = MomentPoly::constant(2, Rational(1));
    if (!(g == one))
        throw VerificationFailed("fpq_compute(" + std::to_string(p) + "," +
                                 std::to_string(q) + "): f(x,1-x) != 1");
}

}  // namespace

MomentPoly fpq_compute(unsigned p, unsigned q) {
    if (p < 2 || q < 1 || q > p - 1)
        throw BadParameters("fpq_compute: need p >= 2 and 1 <= q <= p-1");
    MomentPoly f = (p <= 80) ? assemble_fpq<Int128>(p, q) : assemble_fpq<BigInt>(p, q);
    if (!f.has_integer_coefficients())
        throw NonIntegerCoefficient("fpq_compute: non-integer coefficient");
    verify_unit_on_plane(f, p, q);
    return f;
}

MomentPoly fp2_recurrence(unsigned p) {
    if (p < 2) throw BadParameters("fp2_recurrence: need p >= 2");
    MomentPoly x = MomentPoly::variable(2, 0);
    MomentPoly y = MomentPoly::variable(2, 1);
    MomentPoly prev = MomentPoly::constant(2, Rational(2));  // a_0
    MomentPoly cur = x;                                      // a_1
    for (unsigned k = 2; k <= p; ++k) {
        MomentPoly next = x * cur + y * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    Mono yp(2, {0u, p});
    MomentPoly f = cur;
    f.add_term(yp, (p % 2 == 0) ? Rational(-1) : Rational(1));
    return f;
}

PrimalityResult prime_test(unsigned p, unsigned q) {
    if (p < 2 || q < 1 || q > p - 1)
        throw BadParameters("prime_test: need p >= 2 and 1 <= q <= p-1");
    MomentPoly f = fpq_compute(p, q);
    f.add_term(Mono(2, {p, 0u}), Rational(-1));
    f.add_term(Mono(2, {0u, p}), Rational(-1));
    PrimalityResult result{p, q, true, std::nullopt};
    for (const auto& [m, c] : f.terms()) {
        BigInt num = c.get_num();
        if (num % p != 0) {
            result.is_prime = false;
            result.witness = std::make_pair(m, num);
            break;
        }
    }
    return result;
}

GoldenRatioScalar golden_ratio_scalar(unsigned p, mpfr_prec_t precision_bits) {
    if (p < 3) throw BadParameters("golden_ratio_scalar: need p >= 3");
    MomentPoly f = fp2_recurrence(p);
    Rational s = f.eval({Rational(1), Rational(1)});
    RealInterval root = RealInterval::from_rational(s, precision_bits).rootn(p);
    return {s, root};
}

FpPm1Structure fp_pm1_structure(unsigned p) {
    if (p < 3) throw BadParameters("fp_pm1_structure: need p >= 3");
    MomentPoly f = fpq_compute(p, p - 1);
    FpPm1Structure rep;
    rep.p = p;
    for (const auto& [m, c] : f.terms()) {
        BigInt num = c.get_num();
        if (num > 0)
            ++rep.positive_count;
        else
            ++rep.negative_count;
        if ((m[0] == p && m[1] == 0) || (m[0] == 0 && m[1] == p)) {
            if (num != 1)
                throw StructureViolation("fp_pm1_structure: leading pure-power "
                                         "coefficient is not 1");
            continue;
        }
        if (m[0] != m[1])
            throw StructureViolation("fp_pm1_structure: term off the (xy)^j "
                                     "diagonal: " + m.str());
        unsigned j = m[0];
        if (2 * j > p)
            throw StructureViolation("fp_pm1_structure: nonzero n_j with 2j > p");
        if (j % 2 == 1 && num <= 0)
            throw StructureViolation("fp_pm1_structure: n_j <= 0 for odd j");
        if (j % 2 == 0 && num >= 0)
            throw StructureViolation("fp_pm1_structure: n_j >= 0 for even j");
        rep.n_j.emplace_back(j, num);
    }
    // every n_j with 2j <= p must be nonzero (present)
    for (unsigned j = 1; 2 * j <= p; ++j) {
        bool found = false;
        for (const auto& [jj, c] : rep.n_j)
            if (jj == j) found = true;
        if (!found)
            throw StructureViolation("fp_pm1_structure: n_j = 0 with 2j <= p, j = " +
                                     std::to_string(j));
    }
    unsigned k = p / 4;
    unsigned expected_pos = (p % 4 <= 1) ? k + 2 : k + 3;
    unsigned expected_neg = k;
    if (rep.positive_count != expected_pos || rep.negative_count != expected_neg)
        throw StructureViolation(
            "fp_pm1_structure: sign counts (" + std::to_string(rep.positive_count) +
            ", " + std::to_string(rep.negative_count) + ") do not match the p mod 4 "
            "rule (" + std::to_string(expected_pos) + ", " +
            std::to_string(expected_neg) + ")");
    return rep;
}

std::vector<LimitGapRow> proposition41_check(
    unsigned p, const std::vector<std::pair<Rational, Rational>>& points,
    mpfr_prec_t precision_bits) {
    if (p < 2) throw BadParameters("proposition41_check: need p >= 2");
    MomentPoly f = fp2_recurrence(p);
    std::vector<LimitGapRow> rows;
    rows.reserve(points.size());
    for (const auto& [x, y] : points) {
        if (x < 0 || y < 0)
            throw DomainViolation("proposition41_check: need x >= 0, y >= 0");
        // exact test of x + sqrt(x^2+4y) > 2y
        bool ok;
        if (2 * y - x < 0) {
            ok = true;
        } else {
            ok = (y > 0) && (y < 1 + x);
        }
        if (!ok)
            throw DomainViolation("proposition41_check: point (" + x.get_str() +
                                  ", " + y.get_str() + ") outside the domain");

        Rational fval = f.eval({x, y});
        if (fval < 0)
            throw DomainViolation("proposition41_check: f < 0 at sample point");
        RealInterval fiv = RealInterval::from_rational(fval, precision_bits);
        RealInterval target =
            (RealInterval::from_rational(x, precision_bits) +
             RealInterval::from_rational(x * x + 4 * y, precision_bits).sqrt()) *
            RealInterval::from_rational(Rational(1, 2), precision_bits);
        RealInterval gap =
            fiv / target.pown(p) - RealInterval::from_long(1, precision_bits);
        rows.push_back({x, y, fiv.rootn(p), target, gap});
    }
    return rows;
}

}  // namespace hqmaps
