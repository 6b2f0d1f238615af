/*
 * Copyright 2026 The pftrace Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pftrace/cli/verify.hpp"

#include <algorithm>
#include <functional>

#include "pftrace/pftrace.hpp"

namespace pftrace::cli {
namespace {

using Q = Rational;
using MatQ = Matrix<Q>;
using SkewQ = SkewMatrix<Q>;

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Every (check, dim) pair draws from its own stream.
MatrixSampler sampler_for(std::uint64_t seed, std::size_t check, std::size_t dim) {
    return MatrixSampler(splitmix(seed ^ splitmix(check * 1000003ULL + dim)));
}

SkewQ invertible_skew(MatrixSampler& s, std::size_t dim) {
    for (;;) {
        SkewQ a = s.skew<Q>(dim);
        if (sgn(pf_elimination(a).value) != 0) return a;
    }
}

// Coefficients (ascending) of det(M − λI), interpolated from brute-force
// determinants at λ = 0, 1, …, n.
std::vector<Q> char_poly_by_interpolation(const MatQ& m) {
    const std::size_t n = m.dim();
    std::vector<Q> xs, coef;
    for (std::size_t k = 0; k <= n; ++k) {
        xs.emplace_back(static_cast<long>(k));
        coef.push_back(det_definition(MatQ(m - MatQ::identity(n) * xs.back())));
    }
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = n; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);

    std::vector<Q> poly{coef[n]};
    for (std::size_t i = n; i-- > 0;) {
        std::vector<Q> next(poly.size() + 1, Q(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= xs[i] * poly[k];
        }
        next[0] += coef[i];
        poly = std::move(next);
    }
    return poly;
}

std::vector<Q> square(const std::vector<Q>& p) {
    std::vector<Q> out(2 * p.size() - 1, Q(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) out[i + j] += p[i] * p[j];
    return out;
}

MatQ scaled_identity(std::size_t dim, const Q& v) {
    return MatQ::identity(dim) * v;
}

SkewQ gamma_matrix(int which) {
    // Dirac matrices γ¹ and γ³ in the standard representation are real and
    // skew-symmetric: [[0, σ], [−σ, 0]] with σ = σ¹ or σ³.
    MatQ g(4);
    if (which == 1) {
        g(0, 3) = 1; g(1, 2) = 1; g(2, 1) = -1; g(3, 0) = -1;
    } else {
        g(0, 2) = 1; g(1, 3) = -1; g(2, 0) = -1; g(3, 1) = 1;
    }
    return check_skew(std::move(g));
}

struct Runner {
    const VerifyOptions& opt;
    std::vector<CheckResult> results;
    std::size_t check_index = 0;

    // Runs `trial` opt.trials times; each returns an empty string on success.
    void run(const std::string& name, std::size_t dim,
             const std::function<std::string(MatrixSampler&)>& trial, unsigned trials) {
        MatrixSampler sampler = sampler_for(opt.seed, check_index, dim);
        CheckResult r{name, dim, trials, true, {}};
        for (unsigned t = 0; t < trials && r.passed; ++t) {
            std::string failure = trial(sampler);
            if (!failure.empty()) {
                r.passed = false;
                r.detail = "trial " + std::to_string(t) + ": " + failure;
            }
        }
        results.push_back(std::move(r));
    }
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    Runner run{opt, {}, 0};
    const OracleLimits limits;
    const std::size_t max_even = std::min(opt.max_dim, limits.max_pf_dim) / 2 * 2;

    run.check_index = 1;
    run.run("partition_count_matches_enumeration", 25, [](MatrixSampler&) -> std::string {
        for (unsigned m = 1; m <= 25; ++m)
            if (partition_count(m) != enumerate_diophantine(m).size()) return "m=" + std::to_string(m);
        return {};
    }, 1);

    run.check_index = 2;
    for (std::size_t d = 1; d <= std::min(opt.max_dim, limits.max_det_dim); ++d) {
        run.run("det_bell_equals_definition", d, [d](MatrixSampler& s) -> std::string {
            const MatQ c = s.general<Q>(d);
            const Q det = det_definition(c);
            if (det_via_bell(c) != det) return "det_via_bell";
            if (det_partition_form(c) != det) return "det_partition_form";
            if (lu_det_inverse(c).det != det) return "lu_det_inverse";
            return {};
        }, opt.trials);
    }

    run.check_index = 3;
    for (std::size_t d = 1; d <= std::min(opt.max_dim, std::size_t{6}); ++d) {
        run.run("adjugate_bell_closure", d, [d](MatrixSampler& s) -> std::string {
            MatQ c = s.general<Q>(d);
            // Every other trial is made singular by duplicating a row.
            if (d > 1 && s.below(2) == 0)
                for (std::size_t j = 0; j < d; ++j) c(d - 1, j) = c(0, j);
            const MatQ adj = adjugate_via_bell(c);
            if (c * adj != scaled_identity(d, det_definition(c))) return "C·adj(C) != det(C)·I";
            if (adj != adjugate_definition(c)) return "cofactor mismatch";
            if (adj != adjugate_partition_form(c)) return "partition form mismatch";
            return {};
        }, opt.trials);
    }

    run.check_index = 4;
    for (std::size_t d = 4; d <= max_even; d += 2) {
        run.run("pf_product_reference", d, [d](MatrixSampler& s) -> std::string {
            const SkewQ a = s.skew<Q>(d);
            const SkewQ j = reference_skew<Q>(d / 2);
            const Q expected = pf_definition(a) * pf_definition(j);
            if (pf_product(a, j) != expected) return "Bell form";
            if (d <= 12 && pf_product_partition_form(a, j) != expected) return "partition form";
            return {};
        }, opt.trials);
    }

    run.check_index = 5;
    for (std::size_t d = 4; d <= max_even; d += 2) {
        run.run("skew_inverse_reference", d, [d](MatrixSampler& s) -> std::string {
            const SkewQ a = s.skew<Q>(d);
            const SkewQ j = reference_skew<Q>(d / 2);
            const MatQ scaled = skew_inverse_scaled(a, j);
            if (a.matrix() * scaled != scaled_identity(d, pf_product(a, j))) return "A·result != pf(A)pf(J)·I";
            if (scaled != skew_inverse_partition_form(a, j)) return "partition form mismatch";
            return {};
        }, opt.trials);
    }

    run.check_index = 6;
    for (std::size_t d = 2; d <= std::min(max_even, limits.max_det_dim); d += 2) {
        run.run("cayley_pf_squared_is_det", d, [d](MatrixSampler& s) -> std::string {
            const SkewQ a = s.skew<Q>(d);
            const Q pf = pfaffian(a);
            if (pf * pf != det_via_bell(a.matrix())) return "pf² != det_via_bell";
            if (pf * pf != det_definition(a.matrix())) return "pf² != det_definition";
            return {};
        }, opt.trials);
    }

    run.check_index = 7;
    for (std::size_t d = 2; d <= max_even; d += 2) {
        run.run("pf_product_with_inverse", d, [d](MatrixSampler& s) -> std::string {
            const SkewQ a = invertible_skew(s, d);
            const SkewQ inv = check_skew(*lu_det_inverse(a.matrix()).inverse);
            const Q expected = (d / 2) % 2 == 0 ? Q(1) : Q(-1);
            if (pf_product(a, inv) != expected) return "pf(A)pf(A⁻¹) != (−1)ⁿ";
            if (skew_inverse_scaled(a, inv) != inv.matrix() * expected) return "skew inverse with B = A⁻¹";
            return {};
        }, opt.trials);
    }

    run.check_index = 8;
    for (std::size_t d = 2; d <= max_even; d += 2) {
        run.run("semichar_residual_zero", d, [d](MatrixSampler& s) -> std::string {
            const SkewQ a = s.skew<Q>(d);
            const SkewQ b = s.skew<Q>(d);
            if (semichar_residual(a, b) != MatQ(d)) return "p_n(AB) != 0";
            const auto p = semichar_coeffs(a, b);
            if (p.coeffs.back() != 1) return "leading coefficient";
            if (p.coeffs.front() != pf_product(a, b)) return "constant coefficient";
            if (d <= 6 && square(p.coeffs) != char_poly_by_interpolation(MatQ(a.matrix() * b.matrix())))
                return "det(AB − λI) != p(λ)²";
            return {};
        }, opt.trials);
    }

    run.check_index = 9;
    for (std::size_t d = 2; d <= max_even; d += 2) {
        run.run("product_inverse_closure", d, [d](MatrixSampler& s) -> std::string {
            const SkewQ a = s.skew<Q>(d);
            const SkewQ b = s.skew<Q>(d);
            const MatQ q = product_inverse_scaled(a, b);
            if (product_inverse_coefficients(a, b).size() != d / 2) return "degree above n−1";
            if (MatQ(a.matrix() * b.matrix()) * q != scaled_identity(d, pf_product(a, b)))
                return "AB·result != pf(A)pf(B)·I";
            return {};
        }, opt.trials);
    }

    run.check_index = 10;
    for (std::size_t d = 2; d <= max_even; d += 2) {
        run.run("elimination_equals_definition", d, [d](MatrixSampler& s) -> std::string {
            const SkewQ a = s.skew<Q>(d);
            const Q pf = pf_definition(a);
            if (pf_elimination(a).value != pf) return "pf_elimination";
            if (pfaffian(a) != pf) return "pfaffian";
            return {};
        }, opt.trials);
    }

    run.check_index = 11;
    run.run("dirac_triple_identity", 4, [](MatrixSampler&) -> std::string {
        const SkewQ g1 = gamma_matrix(1);
        const SkewQ g3 = gamma_matrix(3);
        const SkewQ b = check_skew(MatQ(g1.matrix() * g3.matrix()));
        if (!pf_triple_identity_check(g1, b, g3)) return "pf(AB)pf(C) != pf(A)pf(BC)";
        const SkewQ ab = check_skew(MatQ(g1.matrix() * b.matrix()));
        const SkewQ bc = check_skew(MatQ(b.matrix() * g3.matrix()));
        for (const SkewQ* m : {&g1, &b, &g3, &ab, &bc})
            if (pfaffian(*m) != 1) return "a Pfaffian differs from 1";
        return {};
    }, 1);

    return std::move(run.results);
}

}  // namespace pftrace::cli
