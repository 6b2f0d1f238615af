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

#include "pftrace/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pftrace/cli/bench.hpp"
#include "pftrace/cli/matrix_file.hpp"
#include "pftrace/cli/verify.hpp"
#include "pftrace/pftrace.hpp"

#ifndef PFTRACE_VERSION
#define PFTRACE_VERSION "0.0.0"
#endif

namespace pftrace::cli {
namespace {

using Record = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class UsageError : public Error {
public:
    using Error::Error;
};

template <Scalar T>
Record scalar_json(const T& v) {
    if constexpr (is_exact_v<T>) {
        return v.get_str();
    } else {
        return v;
    }
}

template <Scalar T>
Record matrix_json(const Matrix<T>& m) {
    Record rows = Record::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Record row = Record::array();
        for (const auto& v : m.row(i)) row.push_back(scalar_json(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

struct Session {
    std::ostream& out;
    bool timing = true;

    Record begin(std::string_view command, std::string_view method, std::string_view mode) const {
        Record r;
        r["command"] = command;
        if (!method.empty()) r["method"] = method;
        if (!mode.empty()) r["scalar_mode"] = mode;
        return r;
    }

    void emit(Record r, std::optional<double> runtime_ms, std::optional<std::uint64_t> seed = std::nullopt) const {
        if (timing && runtime_ms) r["runtime_ms"] = *runtime_ms;
        if (seed) r["seed"] = *seed;
        r["version"] = PFTRACE_VERSION;
        out << r.dump() << '\n';
    }
};

double since_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::pair<AnyMatrix, AnyMatrix> load_pair(const std::string& a, const std::string& b) {
    AnyMatrix ma = load_matrix(a);
    AnyMatrix mb = load_matrix(b);
    if (ma.index() != mb.index()) throw UsageError("--a and --b use different scalar modes");
    return {std::move(ma), std::move(mb)};
}

// Calls f(Matrix<T>) for the loaded scalar regime.
template <typename F>
void dispatch(const AnyMatrix& m, F&& f) {
    std::visit([&](const auto& mat) { f(mat); }, m);
}

template <typename F>
void dispatch_pair(const AnyMatrix& a, const AnyMatrix& b, F&& f) {
    std::visit([&](const auto& ma) {
        using M = std::decay_t<decltype(ma)>;
        f(ma, std::get<M>(b));
    }, a);
}

void cmd_pf(const Session& s, const std::string& input, const std::string& method) {
    dispatch(load_matrix(input), [&](const auto& m) {
        using T = typename std::decay_t<decltype(m)>::value_type;
        const auto a = check_skew(m);
        a.half_dim();
        Record r = s.begin("pf", method, ScalarTraits<T>::name);
        const auto start = Clock::now();
        if (method == "traces") {
            r["value"] = scalar_json(pfaffian(a));
        } else if (method == "elimination") {
            const auto rep = pf_elimination(a);
            r["value"] = scalar_json(rep.value);
            r["pivot_sign"] = rep.pivot_sign;
            r["swap_count"] = rep.swap_count;
            if (rep.growth) r["growth"] = *rep.growth;
        } else {
            r["value"] = scalar_json(pf_definition(a));
        }
        s.emit(std::move(r), since_ms(start));
    });
}

void cmd_det(const Session& s, const std::string& input, const std::string& method) {
    dispatch(load_matrix(input), [&](const auto& m) {
        using T = typename std::decay_t<decltype(m)>::value_type;
        Record r = s.begin("det", method, ScalarTraits<T>::name);
        const auto start = Clock::now();
        if (method == "bell") {
            r["value"] = scalar_json(det_via_bell(m));
        } else if (method == "lu") {
            r["value"] = scalar_json(lu_det_inverse(m).det);
        } else {
            r["value"] = scalar_json(det_definition(m));
        }
        s.emit(std::move(r), since_ms(start));
    });
}

void cmd_inv(const Session& s, const std::string& input, const std::string& method) {
    dispatch(load_matrix(input), [&](const auto& m) {
        using T = typename std::decay_t<decltype(m)>::value_type;
        Record r = s.begin("inv", method, ScalarTraits<T>::name);
        const auto start = Clock::now();
        if (method == "bell") {
            r["values"] = matrix_json(inverse_via_bell(m));
        } else {
            auto lu = lu_det_inverse(m);
            if (lu.singular()) throw SingularMatrix();
            r["values"] = matrix_json(*lu.inverse);
        }
        s.emit(std::move(r), since_ms(start));
    });
}

template <typename F>
void pair_command(const Session& s, std::string_view name, std::string_view method, const std::string& a,
                  const std::string& b, F&& body) {
    auto [ma, mb] = load_pair(a, b);
    dispatch_pair(ma, mb, [&](const auto& x, const auto& y) {
        using T = typename std::decay_t<decltype(x)>::value_type;
        const auto sa = check_skew(x);
        const auto sb = check_skew(y);
        Record r = s.begin(name, method, ScalarTraits<T>::name);
        const auto start = Clock::now();
        body(r, sa, sb);
        s.emit(std::move(r), since_ms(start));
    });
}

void cmd_verify(const Session& s, const VerifyOptions& opt, bool& all_passed) {
    const auto start = Clock::now();
    const auto results = run_verification(opt);
    all_passed = true;
    for (const auto& c : results) {
        Record r = s.begin("verify", "", "rational");
        r["check"] = c.name;
        r["dim"] = c.dim;
        r["trials"] = c.trials;
        r["passed"] = c.passed;
        if (!c.detail.empty()) r["detail"] = c.detail;
        s.emit(std::move(r), std::nullopt, opt.seed);
        all_passed = all_passed && c.passed;
    }
    Record summary = s.begin("verify", "summary", "rational");
    summary["checks"] = results.size();
    summary["failed"] = std::count_if(results.begin(), results.end(), [](const auto& c) { return !c.passed; });
    summary["max_dim"] = opt.max_dim;
    summary["trials"] = opt.trials;
    summary["passed"] = all_passed;
    s.emit(std::move(summary), since_ms(start), opt.seed);
}

void cmd_bench(const Session& s, const std::vector<std::size_t>& dims, const std::vector<std::string>& methods,
               unsigned repeat, std::uint64_t seed) {
    for (const auto& name : methods) {
        const auto method = bench_method_from_string(name);
        if (!method) throw UsageError("unknown bench method '" + name + "'");
        BenchOptions opt;
        opt.dims = dims;
        opt.method = *method;
        opt.repeat = repeat;
        opt.seed = seed;
        const auto report = bench_suite(opt);
        for (const auto& row : report.rows) {
            Record r = s.begin("bench", name, "f64");
            r["dim"] = row.dim;
            r["median_ms"] = row.median_ms;
            r["calls_per_sample"] = row.calls_per_sample;
            r["repeat"] = repeat;
            s.emit(std::move(r), std::nullopt, seed);
        }
        Record r = s.begin("bench", name, "f64");
        r["slope"] = report.slope ? Record(*report.slope) : Record(nullptr);
        s.emit(std::move(r), std::nullopt, seed);
    }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trace-identity Pfaffians, determinants and inverses"};
    app.name("pftrace");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(PFTRACE_VERSION));
    app.fallthrough();

    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "Omit runtime_ms from result records");

    std::string input, a_path, b_path;
    std::string pf_method, det_method, inv_method, pfprod_method;

    auto* pf = app.add_subcommand("pf", "Pfaffian of a skew-symmetric matrix");
    pf->add_option("--input", input, "Matrix file")->required();
    pf->add_option("--method", pf_method, "traces | elimination | definition")
        ->default_val("traces")
        ->check(CLI::IsMember({"traces", "elimination", "definition"}));

    auto* det = app.add_subcommand("det", "Determinant");
    det->add_option("--input", input, "Matrix file")->required();
    det->add_option("--method", det_method, "bell | lu | definition")
        ->default_val("bell")
        ->check(CLI::IsMember({"bell", "lu", "definition"}));

    auto* inv = app.add_subcommand("inv", "Inverse");
    inv->add_option("--input", input, "Matrix file")->required();
    inv->add_option("--method", inv_method, "bell | lu")->default_val("bell")->check(CLI::IsMember({"bell", "lu"}));

    auto add_pair = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--a", a_path, "Skew matrix A")->required();
        sub->add_option("--b", b_path, "Skew matrix B")->required();
        return sub;
    };
    auto* pfprod = add_pair("pfprod", "pf(A)·pf(B) from traces of powers of AB");
    pfprod->add_option("--method", pfprod_method, "bell | partition")
        ->default_val("bell")
        ->check(CLI::IsMember({"bell", "partition"}));
    auto* skewinv = add_pair("skewinv", "pf(A)·pf(B)·A⁻¹ as a polynomial in BA");
    auto* semichar = add_pair("semichar", "Semi-characteristic polynomial coefficients and residual");

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Exact identity battery over seeded random inputs");
    verify->add_option("--max-dim", vopt.max_dim, "Largest dimension")->default_val(10)->check(CLI::Range(1, 64));
    verify->add_option("--trials", vopt.trials, "Trials per check and dimension")->default_val(25)->check(CLI::PositiveNumber);
    verify->add_option("--seed", vopt.seed, "Random seed")->default_val(42);

    std::vector<std::size_t> dims;
    std::vector<std::string> bench_methods;
    unsigned repeat = 5;
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "Median runtimes and log-log slope (f64)");
    bench->add_option("--dims", dims, "Ascending dimensions")->required()->delimiter(',');
    bench->add_option("--method", bench_methods, "elimination | traces | lu | bell")
        ->delimiter(',')
        ->default_str("elimination");
    bench->add_option("--repeat", repeat, "Samples per dimension (>= 3)")->default_val(5);
    bench->add_option("--seed", bench_seed, "Random seed")->default_val(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Session session{out, !no_timing};
    try {
        if (*pf) {
            cmd_pf(session, input, pf_method);
        } else if (*det) {
            cmd_det(session, input, det_method);
        } else if (*inv) {
            cmd_inv(session, input, inv_method);
        } else if (*pfprod) {
            pair_command(session, "pfprod", pfprod_method, a_path, b_path, [&](Record& r, const auto& a, const auto& b) {
                r["value"] = scalar_json(pfprod_method == "partition" ? pf_product_partition_form(a, b) : pf_product(a, b));
            });
        } else if (*skewinv) {
            pair_command(session, "skewinv", "bell", a_path, b_path, [](Record& r, const auto& a, const auto& b) {
                r["values"] = matrix_json(skew_inverse_scaled(a, b));
            });
        } else if (*semichar) {
            pair_command(session, "semichar", "bell", a_path, b_path, [](Record& r, const auto& a, const auto& b) {
                const auto p = semichar_coeffs(a, b);
                Record coeffs = Record::array();
                for (const auto& c : p.coeffs) coeffs.push_back(scalar_json(c));
                r["coeffs"] = std::move(coeffs);
                const auto residual = semichar_residual(a, b);
                using T = typename std::decay_t<decltype(residual)>::value_type;
                if constexpr (is_exact_v<T>) {
                    Rational best = 0;
                    for (const auto& v : residual.entries()) best = std::max<Rational>(best, abs(v));
                    r["residual_max"] = best.get_str();
                } else {
                    r["residual_max"] = max_magnitude(residual);
                }
            });
        } else if (*verify) {
            bool passed = false;
            cmd_verify(session, vopt, passed);
            if (!passed) {
                err << "pftrace verify: one or more checks failed\n";
                return kExitMathError;
            }
        } else if (*bench) {
            if (bench_methods.empty()) bench_methods.push_back("elimination");
            cmd_bench(session, dims, bench_methods, repeat, bench_seed);
        }
    } catch (const MathError& e) {
        err << "pftrace: " << e.what() << '\n';
        return kExitMathError;
    } catch (const std::exception& e) {
        err << "pftrace: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace pftrace::cli
