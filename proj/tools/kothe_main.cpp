// kothe: decides left Koethe-ness, k-cyclicity and the related invariants for
// path algebras of quivers and structure-constant algebras over exact fields.
//
// Exit codes: 0 analysis completed (whatever the verdict), 1 internal error,
// 2 input error, 3 verification failure (verify-paper only).

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <unistd.h>

#include "bundled.h"
#include "kothe/report.hpp"

using namespace kothe;
using la::Field;
using la::Rng;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr uint64_t kDefaultSeed = 0xC0FFEE;

bool use_color() {
    const char* env = std::getenv("KOTHE_COLOR");
    std::string mode = env ? env : "auto";
    if (mode == "always") return true;
    if (mode == "never") return false;
    return isatty(1);
}

std::string paint(const std::string& s, const char* code) {
    if (!use_color()) return s;
    return std::string("\033[") + code + "m" + s + "\033[0m";
}
std::string green(const std::string& s) { return paint(s, "32"); }
std::string red(const std::string& s) { return paint(s, "31"); }
std::string bold(const std::string& s) { return paint(s, "1"); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    KOTHE_CHECK(in.good(), "cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string vec_str(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string dim_vec_str(const qv::DimVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string seed_hex(uint64_t seed) {
    std::ostringstream os;
    os << "0x" << std::hex << seed;
    return os.str();
}

struct Common {
    std::string field = "GF(5)";
    uint64_t seed = kDefaultSeed;
    std::string json_path;
    bool allow_partial = false;
};

void add_common(CLI::App* sub, Common& c, bool with_partial) {
    sub->add_option("--field", c.field, "base field: GF(p) or QQ")->capture_default_str();
    sub->add_option("--seed", c.seed, "seed for the Las Vegas routines")->capture_default_str();
    sub->add_option("--json", c.json_path, "write the report-v1 JSON to this path");
    if (with_partial)
        sub->add_flag("--allow-partial", c.allow_partial,
                      "allow partial verdicts for representation-infinite or list-less input");
}

void emit(const report::Report& r, const Common& c,
          std::chrono::steady_clock::time_point t0) {
    if (!c.json_path.empty()) {
        std::ofstream out(c.json_path, std::ios::binary);
        KOTHE_CHECK(out.good(), "cannot write JSON to " + c.json_path);
        out << report::dump_json(r);
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << "elapsed: " << ms << " ms\n";
}

void print_header(const report::Report& r) {
    std::cout << bold("kothe " + std::string(kVersion) + " - " + r.command) << "\n";
    if (!r.input_path.empty())
        std::cout << "input:  " << r.input_path
                  << (r.input_digest.empty() ? "" : " (" + r.input_digest + ")") << "\n";
    std::cout << "field:  " << r.field << "\n";
    std::cout << "seed:   " << r.seed << "\n";
}

void print_verdict(const decide::Verdict& v) {
    std::cout << "algebra: " << v.algebra_id << "\n";
    std::cout << "  classes m = " << v.profile.m << ", basic = " << yesno(v.profile.basic)
              << "\n";
    std::cout << "  p = " << vec_str(v.profile.p) << "\n";
    if (v.profile.has_q) std::cout << "  q = " << vec_str(v.profile.q) << "\n";
    std::cout << "  representation-finite: " << yesno(v.profile.representation_finite) << "\n";
    std::cout << "  (" << v.profile.source << ")\n";
    std::cout << "verdict:\n";
    auto line = [&](const std::string& name, const std::optional<bool>& b) {
        if (!b) return;
        std::cout << "  " << name << std::string(name.size() < 24 ? 24 - name.size() : 1, ' ')
                  << (*b ? green("yes") : red("no")) << "\n";
    };
    line("left Koethe:", v.is_kothe);
    if (v.min_cyclic_k) std::cout << "  min cyclic k:           " << *v.min_cyclic_k << "\n";
    if (v.k_tested) line("left " + std::to_string(*v.k_tested) + "-cyclic:", v.is_k_cyclic);
    line("multiplicity-free top:", v.is_multiplicity_free_top);
    line("left local type:", v.is_local_type);
    if (v.matrix_degree_minimal)
        std::cout << "  matrix degree: minimal " << *v.matrix_degree_minimal << ", sum bound "
                  << v.matrix_degree_sum_q.value_or(0) << "\n";
    if (!v.witnesses.empty()) {
        std::cout << "witnesses:\n";
        for (const auto& w : v.witnesses) {
            if (w.indecomposable == "(not representation-finite)") {
                std::cout << "  not representation-finite\n";
                continue;
            }
            std::cout << "  class " << w.class_index << " (vertex " << w.class_label
                      << "): c_top = " << w.c_top << " > bound " << w.bound << ", attained by "
                      << w.indecomposable << "\n";
        }
    }
}

report::Report base_report(const std::string& command, const Common& c,
                           const std::string& path, const std::string& content) {
    report::Report r;
    r.command = command;
    r.tool_version = kVersion;
    r.input_path = path;
    r.input_digest = content.empty() ? "" : "fnv1a64:" + report::fnv1a64_hex(content);
    r.field = c.field;
    r.seed = seed_hex(c.seed);
    return r;
}

report::RepFacts rep_facts(const rep::Rep& m, Rng& rng) {
    alg::PathAlgebra pa = alg::path_algebra(m.quiver, m.field);
    auto aptr = std::make_shared<const alg::FDAlgebra>(pa.algebra);
    alg::Basics b = alg::basics(pa.algebra, rng);
    alg::AModule am = rep::to_amodule(m, pa, aptr);
    report::RepFacts rf;
    rf.dim = dim_vec_str(m.dim);
    rf.c_top = dim_vec_str(rep::c_top(m));
    rf.c_total = dim_vec_str(rep::c_total(m));
    rf.c_soc = dim_vec_str(rep::c_soc(m));
    rf.indecomposable = rep::is_indecomposable(m, rng);
    rf.min_generators = alg::min_generators(am, b);
    return rf;
}

int cmd_analyze(const std::string& path, const Common& c, std::optional<std::size_t> k) {
    auto t0 = std::chrono::steady_clock::now();
    Field f = Field::parse(c.field);
    Rng rng(c.seed);
    std::string content = read_file(path);
    report::Report r = base_report("analyze", c, path, content);
    bool is_json = false;
    for (char ch : content) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        is_json = ch == '{';
        break;
    }
    if (is_json) {
        alg::FDAlgebra a = alg::algebra_from_json(content);
        r.verdict = decide::verdict_for_algebra(a, k, rng, c.allow_partial, path);
    } else {
        rep::InputFile in = rep::parse_input(content, f);
        r.verdict = decide::verdict_for_quiver(in.quiver, f, k, rng, c.allow_partial);
        if (in.representation) r.representation = rep_facts(*in.representation, rng);
    }
    print_header(r);
    print_verdict(*r.verdict);
    if (r.representation) {
        const auto& rf = *r.representation;
        std::cout << "representation:\n  dim " << rf.dim << ": c_top " << rf.c_top
                  << ", c_total " << rf.c_total << ", c_soc " << rf.c_soc << "\n"
                  << "  indecomposable: " << yesno(rf.indecomposable)
                  << "; minimal generators: " << rf.min_generators << "\n";
    }
    emit(r, c, t0);
    return 0;
}

int cmd_indec(const std::string& path, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    Field f = Field::parse(c.field);
    Rng rng(c.seed);
    std::string content = read_file(path);
    rep::InputFile in = rep::parse_input(content, f);
    qv::DynkinClass dc = qv::classify_dynkin(in.quiver);
    KOTHE_CHECK(dc.is_dynkin(), "quiver " + in.quiver.name() +
                                    " is representation-infinite (not ADE); no finite "
                                    "indecomposable list exists");
    auto list = rep::enumerate_indecomposables(in.quiver, f, rng);
    report::Report r = base_report("indec", c, path, content);
    print_header(r);
    std::cout << in.quiver.name() << " (" << dc.str() << "): " << list.size()
              << " indecomposables\n";
    std::size_t max_top = 0;
    for (const rep::Rep& m : list)
        for (long x : rep::c_top(m)) max_top = std::max(max_top, static_cast<std::size_t>(x));
    for (const rep::Rep& m : list) {
        qv::DimVector ct = rep::c_top(m);
        r.indecomposables.push_back(
            {dim_vec_str(m.dim), dim_vec_str(ct), dim_vec_str(rep::c_soc(m))});
        bool attains = max_top > 1 && std::any_of(ct.begin(), ct.end(), [&](long x) {
                           return static_cast<std::size_t>(x) == max_top;
                       });
        std::cout << "  dim " << dim_vec_str(m.dim) << "  c_top " << dim_vec_str(ct)
                  << "  c_soc " << dim_vec_str(rep::c_soc(m))
                  << (attains ? "   <- attains max c_top = " + std::to_string(max_top) : "")
                  << "\n";
    }
    emit(r, c, t0);
    return 0;
}

int cmd_matrix_degree(const std::string& path, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    Field f = Field::parse(c.field);
    Rng rng(c.seed);
    std::string content = read_file(path);
    rep::InputFile in = rep::parse_input(content, f);
    decide::HereditaryAnalysis ha = decide::analyze_quiver(in.quiver, f, rng);
    KOTHE_CHECK(ha.profile.representation_finite,
                "quiver " + in.quiver.name() + " is representation-infinite (not ADE)");
    decide::MatrixDegree md = decide::kothe_matrix_degree(ha.profile);
    report::Report r = base_report("matrix-degree", c, path, content);
    r.matrix_degree = md;
    print_header(r);
    std::cout << "minimal n with Mat_n left Koethe: " << md.minimal << "\n";
    std::cout << "constructive degree (sum of q):   " << md.sum_q << "\n";
    emit(r, c, t0);
    return 0;
}

int cmd_decompose(const std::string& path, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    Field f = Field::parse(c.field);
    Rng rng(c.seed);
    std::string content = read_file(path);
    rep::InputFile in = rep::parse_input(content, f);
    KOTHE_CHECK(in.representation.has_value(),
                "decompose needs a rep block after the quiver in " + path);
    auto parts = rep::decompose(*in.representation, rng);
    report::Report r = base_report("decompose", c, path, content);
    print_header(r);
    std::cout << "summands of dim " << dim_vec_str(in.representation->dim) << ":\n";
    for (auto& [m, mult] : parts) {
        r.summands.push_back({dim_vec_str(m.dim), mult});
        std::cout << "  dim " << dim_vec_str(m.dim) << "  x" << mult << "\n";
    }
    emit(r, c, t0);
    return 0;
}

struct BundledFile {
    const char* name;
    const char* content;
};

const BundledFile kBundle[] = {
    {"a2.quiver", bundled::a2_quiver},
    {"b2.quiver", bundled::b2_quiver},
    {"kronecker.quiver", bundled::kronecker_quiver},
    {"d4_sink.quiver", bundled::d4_sink_quiver},
    {"p1_plus_s1.quiver", bundled::p1_plus_s1_quiver},
};

int cmd_verify_paper(const Common& c, const std::string& data_dir) {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(c.seed);
    report::Report r = base_report("verify-paper", c, "", "");
    r.input_path = data_dir.empty() ? "(bundled)" : data_dir;
    print_header(r);

    std::map<std::string, std::string> sources;
    for (const BundledFile& b : kBundle) sources[b.name] = b.content;
    if (!data_dir.empty()) {
        for (const BundledFile& b : kBundle) {
            std::string disk = read_file(data_dir + "/" + b.name);
            KOTHE_CHECK(disk == b.content, std::string("integrity error: ") + b.name +
                                               " does not match the bundled canonical content");
            sources[b.name] = disk;
        }
    }

    auto check = [&](const std::string& what, bool ok) {
        r.verification.push_back({what, ok});
        std::cout << (ok ? green("  PASS  ") : red("  FAIL  ")) << what << "\n";
    };

    const Field primary = Field::parse(c.field);
    const Field fields[] = {Field::gfp(2), Field::gfp(3), Field::gfp(5), Field::rationals()};

    {
        rep::InputFile in = rep::parse_input(sources.at("b2.quiver"), primary);
        KOTHE_CHECK(in.representation.has_value(), "bundled b2.quiver lost its rep block");
        const rep::Rep& m = *in.representation;
        check("bundled 4-star representation has c_top = (2,0,0,0)",
              rep::c_top(m) == qv::DimVector{2, 0, 0, 0});
        check("bundled 4-star representation is indecomposable",
              rep::is_indecomposable(m, rng));
        check("bundled 4-star representation is a brick (End of dimension 1)",
              rep::hom_space(m, m).size() == 1);
        decide::Verdict v = decide::verdict_for_quiver(in.quiver, primary, 2, rng, false);
        check("4-star algebra is not left Koethe", v.is_kothe && !*v.is_kothe);
        check("the Koethe witness sits at the center vertex with c_top = 2",
              !v.witnesses.empty() && v.witnesses[0].class_label == "1" &&
                  v.witnesses[0].c_top == 2);
        check("4-star algebra is left 2-cyclic", v.is_k_cyclic && *v.is_k_cyclic);
        check("minimal k is 2", v.min_cyclic_k == std::size_t{2});
        check("Koethe matrix degree is 2 with sum bound 5",
              v.matrix_degree_minimal == std::size_t{2} &&
                  v.matrix_degree_sum_q == std::size_t{5});
        auto list = rep::enumerate_indecomposables(in.quiver, primary, rng);
        std::size_t count2111 = 0;
        for (const rep::Rep& x : list)
            if (x.dim == qv::DimVector{2, 1, 1, 1}) ++count2111;
        check("enumeration finds 12 indecomposables with one of dim (2,1,1,1)",
              list.size() == 12 && count2111 == 1);
        report::RepFacts rf = rep_facts(m, rng);
        check("generator-count formula gives 2 for the bundled representation",
              rf.min_generators == 2);
        if (primary.is_gf() && primary.p() == 2) {
            alg::PathAlgebra pab = alg::path_algebra(in.quiver, primary);
            auto aptrb = std::make_shared<const alg::FDAlgebra>(pab.algebra);
            alg::AModule amb = rep::to_amodule(m, pab, aptrb);
            check("brute-force generator search agrees",
                  alg::brute_force_min_generators(amb) == 2);
        }
        alg::PathAlgebra pa = alg::path_algebra(in.quiver, primary);
        auto aptr = std::make_shared<const alg::FDAlgebra>(pa.algebra);
        alg::Basics b = alg::basics(pa.algebra, rng);
        alg::AModule am = rep::to_amodule(m, pa, aptr);
        check("composition counts: idempotent route equals radical-series route",
              alg::module_invariants(am, b).c_total == alg::c_total_radical_route(am, b));
    }
    {
        rep::InputFile in = rep::parse_input(sources.at("a2.quiver"), primary);
        decide::Verdict v =
            decide::verdict_for_quiver(in.quiver, primary, std::nullopt, rng, false);
        check("bundled A2 is left Koethe with q = p = (1,1)",
              v.is_kothe && *v.is_kothe && v.profile.q == std::vector<std::size_t>{1, 1});
    }
    {
        bool threw = false;
        try {
            rep::InputFile in = rep::parse_input(sources.at("kronecker.quiver"), primary);
            decide::verdict_for_quiver(in.quiver, primary, std::nullopt, rng, false);
        } catch (const Error&) {
            threw = true;
        }
        check("bundled Kronecker quiver is rejected as representation-infinite", threw);
    }
    {
        bool agree = true;
        std::optional<decide::Verdict> first;
        for (const Field& f : fields) {
            rep::InputFile in = rep::parse_input(sources.at("b2.quiver"), f);
            decide::Verdict v = decide::verdict_for_quiver(in.quiver, f, 2, rng, false);
            if (!first) {
                first = v;
                continue;
            }
            agree = agree && v.profile.q == first->profile.q &&
                    v.is_kothe == first->is_kothe && v.is_k_cyclic == first->is_k_cyclic &&
                    v.min_cyclic_k == first->min_cyclic_k;
        }
        check("verdicts identical over GF(2), GF(3), GF(5) and QQ", agree);
    }
    {
        rep::InputFile in = rep::parse_input(sources.at("b2.quiver"), Field::gfp(3));
        decide::MoritaReport mr =
            decide::morita_consistency_suite(in.quiver, Field::gfp(3), 2, rng);
        check("Morita consistency suite (degree 2, from-scratch profiles)", mr.ok);
    }

    bool all = true;
    for (const auto& v : r.verification) all = all && v.pass;
    std::cout << (all ? green("all checks passed") : red("some checks FAILED")) << "\n";
    emit(r, c, t0);
    return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decides left Koethe-ness, k-cyclicity, multiplicity-free top and local "
                 "type for path algebras of quivers and structure-constant algebras"};
    app.require_subcommand(1);

    Common c_analyze, c_indec, c_mdeg, c_dec, c_verify;
    std::string f_analyze, f_indec, f_mdeg, f_dec, verify_dir;

    CLI::App* analyze =
        app.add_subcommand("analyze", "full verdict for a quiver or algebra file");
    analyze
        ->add_option("file", f_analyze,
                     "quiver DSL (optionally with a rep block) or algebra JSON")
        ->required();
    std::size_t k_raw = 0;
    CLI::Option* kopt =
        analyze->add_option("--k", k_raw, "also test left k-cyclicity for this k");
    add_common(analyze, c_analyze, true);

    CLI::App* indec =
        app.add_subcommand("indec", "list all indecomposables with their invariants");
    indec->add_option("file", f_indec, "quiver DSL file")->required();
    add_common(indec, c_indec, false);

    CLI::App* mdeg = app.add_subcommand(
        "matrix-degree", "minimal n with Mat_n left Koethe, plus the sum bound");
    mdeg->add_option("file", f_mdeg, "quiver DSL file")->required();
    add_common(mdeg, c_mdeg, false);

    CLI::App* dec =
        app.add_subcommand("decompose", "decompose a representation into indecomposables");
    dec->add_option("file", f_dec, "quiver DSL file with a rep block")->required();
    add_common(dec, c_dec, false);

    CLI::App* verify = app.add_subcommand("verify-paper", "run the bundled verification corpus");
    verify->add_option("--data", verify_dir,
                       "read the corpus from this directory (integrity-checked)");
    add_common(verify, c_verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze) {
            std::optional<std::size_t> k;
            if (kopt->count()) k = k_raw;
            return cmd_analyze(f_analyze, c_analyze, k);
        }
        if (*indec) return cmd_indec(f_indec, c_indec);
        if (*mdeg) return cmd_matrix_degree(f_mdeg, c_mdeg);
        if (*dec) return cmd_decompose(f_dec, c_dec);
        if (*verify) return cmd_verify_paper(c_verify, verify_dir);
    } catch (const ParseError& e) {
        std::cerr << red("input error: ") << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::string msg = e.what();
        bool internal = msg.rfind("internal", 0) == 0;
        std::cerr << red(internal ? "internal error: " : "input error: ") << msg << "\n";
        return internal ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << red("internal error: ") << e.what() << "\n";
        return 1;
    }
    return 1;
}
