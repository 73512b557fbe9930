/*
   Copyright 2026 The fillcurve authors

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

// Command-line front end: verification suites per q, classification tables,
// per-curve reports, and centralizer reports, as text, JSON or CSV.
//
// Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
// input error.
//
// JSON and CSV output is byte-deterministic for fixed inputs; wall-clock
// timings appear only in the text format.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fillcurve/fillcurve.hpp"

namespace {

using namespace fillcurve;
using Clock = std::chrono::steady_clock;

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string command;
    std::vector<Check> checks;
    Json payload;  // command-specific report body, may be null
    long long elapsed_ms = 0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct OutputOptions {
    std::string format = "text";
    std::string out_file;
};

int emit(const SuiteResult& r, const OutputOptions& opts) {
    std::ostringstream body;
    if (opts.format == "json") {
        Json j;
        j["schema"] = "fillcurve/1";
        j["command"] = r.command;
        j["checks"] = Json::array();
        int pass = 0, fail = 0;
        for (const auto& c : r.checks) {
            j["checks"].push_back(Json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
            (c.pass ? pass : fail)++;
        }
        j["counts"] = Json{{"pass", pass}, {"fail", fail}};
        if (!r.payload.is_null()) j["report"] = r.payload;
        j["exit"] = r.all_pass() ? 0 : 1;
        body << j.dump(2) << "\n";
    } else if (opts.format == "csv") {
        body << "name,status,detail\n";
        for (const auto& c : r.checks)
            body << c.name << "," << (c.pass ? "pass" : "fail") << ",\"" << c.detail << "\"\n";
    } else {
        for (const auto& c : r.checks)
            body << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << (c.detail.empty() ? "" : "  " + c.detail)
                 << "\n";
        if (!r.payload.is_null()) body << r.payload.dump(2) << "\n";
        int pass = 0, fail = 0;
        for (const auto& c : r.checks) (c.pass ? pass : fail)++;
        body << pass << " passed, " << fail << " failed (" << r.elapsed_ms << " ms)\n";
    }
    if (!opts.out_file.empty()) {
        std::ofstream f(opts.out_file, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open output file: " << opts.out_file << "\n";
            return 2;
        }
        f << body.str();
    } else {
        std::cout << body.str();
    }
    return r.all_pass() ? 0 : 1;
}

struct QDesc {
    std::int64_t q = 0, p = 0;
    int e = 0;
};

QDesc parse_q(std::int64_t q) {
    QDesc d;
    d.q = q;
    for (std::int64_t p = 2; p <= q; ++p) {
        if (!detail::is_prime(p) || q % p != 0) continue;
        std::int64_t v = q;
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (v == 1) {
            d.p = p;
            d.e = e;
            return d;
        }
        break;
    }
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

FieldCtxPtr field_for(const QDesc& d) { return make_field(d.p, d.e); }

std::vector<Cubic> irreducible_cubics_of(const FieldCtxPtr& K) {
    std::vector<Cubic> out;
    for (const Cubic& f : enumerate_cubics(K))
        if (is_irreducible(f)) out.push_back(f);
    return out;
}

// ---------------------------------------------------------------------------
// verify: the per-q suites

Check check_smoothness_biconditional(const FieldCtxPtr& K, bool deep) {
    const std::int64_t q = K->size();
    std::vector<int> layers = {1, 2, 3};
    if (deep) layers.push_back(6);
    std::int64_t smooth_count = 0, singular_count = 0;
    for (const Cubic& f : enumerate_cubics(K)) {
        const Mat a = companion3(f);
        const bool criterion = is_smooth_criterion(a);
        if (criterion) {
            if (!singular_scan(canonical_form(f), layers).empty())
                return {"smoothness_biconditional", false, "unexpected singular point for " + to_string(f)};
            ++smooth_count;
        } else {
            const auto hits = singular_scan(canonical_form(f), {1});
            if (hits.empty())
                return {"smoothness_biconditional", false, "no rational singular point for " + to_string(f)};
            ++singular_count;
        }
    }
    std::string layer_text = "m<=3";
    if (deep) layer_text = "m in {1,2,3,6}";
    return {"smoothness_biconditional", true,
            std::to_string(smooth_count) + " smooth / " + std::to_string(singular_count) +
                " singular cubics at q=" + std::to_string(q) + ", " + layer_text};
}

Check check_min_degree(const FieldCtxPtr& K) {
    const auto rep = min_degree_certificate(K);
    return {"min_degree_certificate", rep.ok,
            "witness " + to_string(rep.witness) + ", degree " + std::to_string(K->size() + 2)};
}

Check check_ideal_dimensions(const FieldCtxPtr& K) {
    const std::int64_t q = K->size();
    for (int d = 1; d <= static_cast<int>(q) + 4; ++d) {
        const auto [ideal_dim, vanish_dim] = ideal_dimensions(K, d);
        if (ideal_dim != vanish_dim)
            return {"ideal_generation_dimensions", false, "mismatch at degree " + std::to_string(d)};
    }
    if (q == 2 && (ideal_dimensions(K, 3) != std::make_pair(3, 3) || ideal_dimensions(K, 4) != std::make_pair(8, 8) ||
                   ideal_dimensions(K, 2) != std::make_pair(0, 0)))
        return {"ideal_generation_dimensions", false, "pinned q=2 dimensions are off"};
    return {"ideal_generation_dimensions", true, "degrees 1.." + std::to_string(q + 4)};
}

Check check_covariance(const FieldCtxPtr& K) {
    const std::int64_t q = K->size();
    int count = 0;
    try {
        if (q == 2) {
            for_each_gl(K, 3, [&](const Mat& b) {
                pullback_uvw(b);
                ++count;
            });
        } else {
            std::mt19937 rng(static_cast<unsigned>(0x5eed + q));
            std::uniform_int_distribution<std::int64_t> dist(0, q - 1);
            while (count < 100) {
                Mat b(K, 3);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) b.at(i, j) = element_at(K, dist(rng));
                if (det(b).is_zero()) continue;
                pullback_uvw(b);
                ++count;
            }
        }
    } catch (const Error& e) {
        return {"cofactor_covariance", false, e.what()};
    }
    return {"cofactor_covariance", true, std::to_string(count) + " matrices"};
}

Check check_aut_orders(const FieldCtxPtr& K) {
    const std::int64_t q = K->size();
    const std::int64_t singer = q * q + q + 1;
    std::string pinned;
    for (const Cubic& f : irreducible_cubics_of(K)) {
        const Mat a = companion3(f);
        const auto rep = enumerate_aut(a);
        const std::int64_t expected = rep.case_detected == SpecialCase::None ? singer : 3 * singer;
        if (rep.order != expected)
            return {"automorphism_orders", false, to_string(f) + " has order " + std::to_string(rep.order)};
        if (q <= 3) {
            const auto scanned = aut_via_gl_scan(a);
            if (scanned.size() != static_cast<std::size_t>(rep.order) ||
                std::set<Mat>(rep.elements.begin(), rep.elements.end()) != scanned)
                return {"automorphism_orders", false, "GL scan disagrees for " + to_string(f)};
        }
    }
    if (q == 2) pinned = "|Aut|=7 for both cubics, GL(3,2)-scan verified";
    if (q == 3) pinned = "39 for the harmonic orbit (not 78), 13 otherwise, GL(3,3)-scan verified";
    if (q == 4) pinned = "63 for the two pure-constant orbits, 21 otherwise";
    if (q == 5) pinned = "31 for every irreducible cubic";
    if (q == 7) pinned = "57 or 171 per the special-case split";
    return {"automorphism_orders", true, pinned};
}

Check check_group_structure(const FieldCtxPtr& K) {
    for (const Cubic& f : irreducible_cubics_of(K)) {
        const auto rep = enumerate_aut(companion3(f));
        if (!rep.singer_normal)
            return {"singer_subgroup_structure", false, "subgroup not normal for " + to_string(f)};
        // enumerate_aut already cross-checks quotient vs special_case_detect
        // and the order split; a throw would surface as a failure here.
    }
    return {"singer_subgroup_structure", true, "order q^2+q+1, normal, quotient in {1, Z3}"};
}

Check check_fixed_points(const FieldCtxPtr& K) {
    const std::int64_t q = K->size();
    const Cubic f = irreducible_cubics_of(K).front();
    const Mat a = companion3(f);
    const auto eig = eigen_points(a, make_extension(K, 3));
    const std::set<ProjPoint> expected(eig.begin(), eig.end());
    for (std::int64_t s = 1; s < q * q + q + 1; ++s) {
        const auto fps = fixed_points(a, s);
        if (std::set<ProjPoint>(fps.begin(), fps.end()) != expected)
            return {"singer_fixed_points", false, "power " + std::to_string(s)};
    }
    return {"singer_fixed_points", true, "all powers fix exactly the three eigen-points"};
}

Check check_classification(const FieldCtxPtr& K) {
    const std::int64_t q = K->size();
    const auto rep = classes(K);
    for (const auto& cl : rep.classes) {
        if (cl.labels.count("generic"))
            return {"classification", false, "unlabeled orbit " + to_string(cl.representative)};
        if ((q * (q - 1)) % cl.size != 0)
            return {"classification", false, "orbit size does not divide q(q-1)"};
    }
    if (q == 2 && (rep.classes.size() != 1 || rep.classes[0].size != 2))
        return {"classification", false, "expected one class of size 2"};
    if (q == 3 && rep.classes.size() != 2) return {"classification", false, "expected two classes"};
    if (q == 4) {
        const FieldElem w = element_at(K, 1);
        if (equivalent(Cubic{zero(K), zero(K), w}, Cubic{zero(K), zero(K), w * w}))
            return {"classification", false, "the two pure-constant classes merged"};
    }
    if (q <= 3) {
        // curves_equivalent internally cross-checks against the GL search.
        for (const auto& c1 : rep.classes)
            for (const auto& c2 : rep.classes) {
                const bool eq = curves_equivalent(companion3(c1.representative), companion3(c2.representative));
                if (eq != (c1.representative == c2.representative))
                    return {"classification", false, "curve equivalence disagrees with the partition"};
            }
    }
    std::string sizes;
    for (const auto& cl : rep.classes) sizes += (sizes.empty() ? "" : "+") + std::to_string(cl.size);
    return {"classification", true, std::to_string(rep.classes.size()) + " classes (" + sizes + ") of " +
                                        std::to_string(rep.irreducible_count) + " cubics"};
}

Check check_identities(const FieldCtxPtr& K) {
    for (const Cubic& f : irreducible_cubics_of(K))
        for (const auto& [name, ok] : proof_identities(f))
            if (!ok) return {"local_coefficient_identities", false, to_string(f) + " " + name};
    return {"local_coefficient_identities", true, "all irreducible cubics"};
}

Check check_centralizers(const FieldCtxPtr& K) {
    const std::int64_t q = K->size();
    for (int n : {2, 3}) {
        std::vector<std::int64_t> odo(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<FieldElem> tail;
            for (int j = 0; j < n; ++j) tail.push_back(element_at(K, odo[static_cast<std::size_t>(j)]));
            MonicPoly f(K, std::move(tail));
            if (is_irreducible(f)) {
                const Mat a0 = companion(f, CompanionShape::BottomRow);
                CentralizerReport rep = centralizer_report(a0);  // throws on any violated invariant
                std::int64_t Q = 1;
                for (int i = 0; i < n; ++i) Q *= q;
                if (rep.z_gl_order != Q - 1 || rep.pgl_image_order != (Q - 1) / (q - 1))
                    return {"centralizer_structure", false, to_string(f)};
                if (rep.support_k && rep.pi_image_order != *rep.support_k)
                    return {"centralizer_structure", false, "image order off for " + to_string(f)};
                if (rep.support_k) {
                    const FieldElem rho = pow(primitive_element(K), (q - 1) / *rep.support_k);
                    diag_witness(rho, a0);
                }
                // Full GL cross-check where the scan stays under ~10^6.
                const double gl_cost = std::pow(static_cast<double>(q), n * n);
                if (gl_cost <= 1.1e6) {
                    std::int64_t commuting = 0;
                    for_each_gl(K, n, [&](const Mat& b) {
                        if (b * a0 == a0 * b) ++commuting;
                    });
                    if (commuting != rep.z_gl_order)
                        return {"centralizer_structure", false, "GL scan disagrees for " + to_string(f)};
                }
            }
            int pos = n - 1;
            while (pos >= 0 && ++odo[static_cast<std::size_t>(pos)] == q) odo[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
        }
    }
    return {"centralizer_structure", true, "n=2,3, all irreducible polynomials"};
}

SuiteResult run_verify(const std::vector<std::int64_t>& qs, bool deep) {
    SuiteResult result;
    result.command = "verify";
    const auto t0 = Clock::now();
    for (std::int64_t q : qs) {
        const QDesc d = parse_q(q);
        const FieldCtxPtr K = field_for(d);
        const std::string tag = "q" + std::to_string(q) + ".";
        auto add = [&](Check c) {
            c.name = tag + c.name;
            result.checks.push_back(std::move(c));
        };
        if (q == 7) {
            // Reduced suite: the group-theoretic checks only.
            add(check_aut_orders(K));
            add(check_group_structure(K));
            continue;
        }
        add(check_smoothness_biconditional(K, deep));
        add(check_min_degree(K));
        if (q <= 3) add(check_ideal_dimensions(K));
        add(check_covariance(K));
        add(check_aut_orders(K));
        add(check_group_structure(K));
        if (q <= 3) add(check_fixed_points(K));
        add(check_classification(K));
        if (q <= 4) add(check_identities(K));
        add(check_centralizers(K));
    }
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return result;
}

// ---------------------------------------------------------------------------
// classify / curve / centralizer

SuiteResult run_classify(std::int64_t q) {
    SuiteResult result;
    result.command = "classify";
    const auto t0 = Clock::now();
    const FieldCtxPtr K = field_for(parse_q(q));
    const auto rep = classes(K);
    result.payload = to_json(rep);
    result.checks.push_back({"classification", true,
                             std::to_string(rep.classes.size()) + " classes of " +
                                 std::to_string(rep.irreducible_count) + " irreducible cubics"});
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return result;
}

std::string classify_as_csv(const ClassReport& rep) {
    std::ostringstream os;
    os << "representative,size,labels\n";
    for (const auto& cl : rep.classes) {
        os << to_string(cl.representative) << "," << cl.size << ",";
        bool first = true;
        for (const auto& l : cl.labels) {
            os << (first ? "" : "|") << l;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

std::vector<FieldElem> parse_elem_list(const FieldCtxPtr& K, const std::string& text) {
    // Split on commas at bracket depth zero.
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    std::vector<FieldElem> out;
    for (const auto& p : parts) out.push_back(parse_elem(K, p));
    return out;
}

SuiteResult run_curve(std::int64_t q, const std::string& cubic_text, bool deep, bool dump_elements) {
    SuiteResult result;
    result.command = "curve";
    const auto t0 = Clock::now();
    const FieldCtxPtr K = field_for(parse_q(q));
    const auto coeffs = parse_elem_list(K, cubic_text);
    if (coeffs.size() != 3) throw std::invalid_argument("--cubic expects \"c,b,a\" for t^3-(c*t^2+b*t+a)");
    const Cubic f{coeffs[0], coeffs[1], coeffs[2]};

    std::vector<int> layers = {1, 2, 3};
    if (deep) layers.push_back(6);
    const auto report = smoothness_report(f, layers);
    Json j = to_json(report);
    j["form"] = to_string(canonical_form(f));
    if (report.criterion_result) {
        const auto aut = enumerate_aut(companion3(f));
        j["aut"] = to_json(aut, dump_elements && q <= 4);
        result.checks.push_back({"automorphisms", true, "|Aut| = " + std::to_string(aut.order)});
    } else {
        result.checks.push_back(
            {"singular", true, "reducible cubic; singular point " +
                                   (report.scan_results.empty() ? std::string("(none found)")
                                                                : to_string(report.scan_results.front().point))});
    }
    result.checks.insert(result.checks.begin(),
                         Check{"smoothness_consistent", report.consistent,
                               report.criterion_result ? "smooth" : "singular"});
    result.payload = std::move(j);
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return result;
}

SuiteResult run_centralizer(std::int64_t q, int n, const std::string& poly_text) {
    SuiteResult result;
    result.command = "centralizer";
    const auto t0 = Clock::now();
    const FieldCtxPtr K = field_for(parse_q(q));
    const auto coeffs = parse_elem_list(K, poly_text);
    if (static_cast<int>(coeffs.size()) != n)
        throw std::invalid_argument("--poly expects the n low-order coefficients of a monic polynomial");
    MonicPoly f(K, coeffs);
    if (!is_irreducible(f)) throw std::invalid_argument("polynomial is reducible: " + to_string(f));
    const auto rep = centralizer_report(companion(f, CompanionShape::BottomRow));
    result.payload = to_json(rep);
    result.checks.push_back({"centralizer", true,
                             std::to_string(rep.z_gl_order) + "/" + std::to_string(rep.pgl_image_order) +
                                 "/" + std::to_string(rep.pi_image_order)});
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return result;
}

std::vector<std::int64_t> parse_q_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    if (out.empty()) throw std::invalid_argument("empty q list");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "fillcurve: exact verification of nonsingular plane curves of degree q+2 through all rational "
        "points of P^2(F_q)"};
    app.require_subcommand(1);

    std::string q_list_text, format = "text", out_file, cubic_text, poly_text;
    std::int64_t q_single = 0;
    int n_dim = 3;
    bool deep = false, dump_elements = false;

    auto* verify = app.add_subcommand("verify", "run the per-q verification suites");
    verify->add_option("--q", q_list_text, "comma-separated prime powers, e.g. 2,3,4,5")->required();
    verify->add_flag("--deep", deep, "add the m=6 scan layer (costly for q=5)");
    verify->add_option("--format", format, "text|json|csv");
    verify->add_option("--out", out_file, "write the report to a file");

    auto* classify_cmd = app.add_subcommand("classify", "orbit classification of irreducible cubics");
    classify_cmd->add_option("--q", q_single, "prime power")->required();
    classify_cmd->add_option("--format", format, "text|json|csv");
    classify_cmd->add_option("--out", out_file, "write the report to a file");

    auto* curve = app.add_subcommand("curve", "report on one curve given its cubic");
    curve->add_option("--q", q_single, "prime power")->required();
    curve->add_option("--cubic", cubic_text, "c,b,a for t^3-(c*t^2+b*t+a); note the subtracted sign")
        ->required();
    curve->add_flag("--deep", deep, "add the m=6 scan layer");
    curve->add_flag("--elements", dump_elements, "include the group elements (q <= 4)");
    curve->add_option("--format", format, "text|json|csv");
    curve->add_option("--out", out_file, "write the report to a file");

    auto* centralizer_cmd = app.add_subcommand("centralizer", "centralizer report for a companion matrix");
    centralizer_cmd->add_option("--q", q_single, "prime power")->required();
    centralizer_cmd->add_option("--n", n_dim, "matrix dimension (2..4)");
    centralizer_cmd
        ->add_option("--poly", poly_text, "low-order coefficients of the monic polynomial, e.g. 1,1,0")
        ->required();
    centralizer_cmd->add_option("--format", format, "text|json|csv");
    centralizer_cmd->add_option("--out", out_file, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    OutputOptions opts{format, out_file};
    if (format != "text" && format != "json" && format != "csv") {
        std::cerr << "unknown format: " << format << "\n";
        return 2;
    }

    try {
        if (*verify) {
            const auto qs = parse_q_list(q_list_text);
            for (std::int64_t q : qs) {
                parse_q(q);
                if (q > 7 || q == 6) throw std::invalid_argument("verify supports q in {2,3,4,5} and 7");
                if (q == 7 && deep) throw std::invalid_argument("q=7 is supported without --deep only");
            }
            return emit(run_verify(qs, deep), opts);
        }
        if (*classify_cmd) {
            if (q_single > 9) throw std::invalid_argument("classify supports prime powers up to 9");
            if (format == "csv") {
                const FieldCtxPtr K = field_for(parse_q(q_single));
                const std::string csv = classify_as_csv(classes(K));
                if (!out_file.empty()) {
                    std::ofstream f(out_file, std::ios::binary);
                    f << csv;
                } else {
                    std::cout << csv;
                }
                return 0;
            }
            return emit(run_classify(q_single), opts);
        }
        if (*curve) {
            if (q_single > 9) throw std::invalid_argument("curve supports prime powers up to 9");
            return emit(run_curve(q_single, cubic_text, deep, dump_elements), opts);
        }
        if (*centralizer_cmd) {
            if (q_single > 9) throw std::invalid_argument("centralizer supports prime powers up to 9");
            if (n_dim < 2 || n_dim > 4) throw std::invalid_argument("--n must be 2, 3 or 4");
            return emit(run_centralizer(q_single, n_dim, poly_text), opts);
        }
    } catch (const Error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
