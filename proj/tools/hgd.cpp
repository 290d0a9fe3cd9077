#include "CLI11.hpp"

#include "hgd/approx.hpp"
#include "hgd/covers.hpp"
#include "hgd/decomposition.hpp"
#include "hgd/fhd_solver.hpp"
#include "hgd/ghd_solver.hpp"
#include "hgd/hardness.hpp"
#include "hgd/hd_solver.hpp"
#include "hgd/hypergraph.hpp"
#include "hgd/io.hpp"
#include "hgd/oracle.hpp"
#include "hgd/properties.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace hgd;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_reject = 1;
constexpr int exit_input = 2;
constexpr int exit_budget = 3;

std::size_t env_or(const char * name, std::size_t fallback)
{
    const char * v = std::getenv(name);
    if (v == nullptr)
        return fallback;
    return static_cast<std::size_t>(std::stoull(v));
}

Rational parse_k(const std::string & text)
{
    auto k = Rational::parse(text);
    if (! k.has_value() || *k < Rational(1))
        throw Error("width bound must be a rational >= 1, got " + text);
    return *k;
}

DecompKind parse_kind(const std::string & text)
{
    if (text == "hd" || text == "HD")
        return DecompKind::HD;
    if (text == "ghd" || text == "GHD")
        return DecompKind::GHD;
    if (text == "fhd" || text == "FHD")
        return DecompKind::FHD;
    throw Error("unknown kind " + text + " (expected hd|ghd|fhd)");
}

void emit(const std::string & out_path, const std::string & text)
{
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

int cmd_analyze(const std::vector<std::string> & files, const std::string & cs_text,
        bool csv, std::size_t vc_cap, std::size_t jobs)
{
    std::vector<std::size_t> cs;
    std::istringstream in(cs_text);
    std::string item;
    while (std::getline(in, item, ','))
        cs.push_back(std::stoul(item));

    auto report = analyze_corpus(files, cs, vc_cap, jobs);
    if (csv)
        std::cout << report.csv(cs);
    else
        std::cout << report.table_text(cs);
    if (! files.empty() && report.rows.empty())
        return exit_input;
    return exit_ok;
}

int cmd_solve(const std::string & kind_text, const std::string & k_text,
        const std::string & mode_text, const std::string & c_text, bool rank_mode,
        bool lax_disjoint_w, const std::string & file, const std::string & out_path,
        std::size_t budget)
{
    DecompKind kind = parse_kind(kind_text);
    Rational k = parse_k(k_text);
    Hypergraph h = read_hypergraph_file(file);

    std::optional<DecompositionTree> result;
    if (kind == DecompKind::HD) {
        result = solve_hd(h, static_cast<std::size_t>(k.floor_nonneg()));
    }
    else if (kind == DecompKind::GHD) {
        GhdMode mode;
        if (mode_text.rfind("bmip", 0) == 0) {
            mode.bmip = true;
            auto colon = mode_text.find(':');
            if (colon == std::string::npos)
                throw Error("bmip mode needs a c parameter, e.g. --mode bmip:3");
            mode.c = std::stoul(mode_text.substr(colon + 1));
        }
        else if (mode_text != "bip") {
            throw Error("unknown mode " + mode_text + " (expected bip|bmip:C)");
        }
        auto res = solve_ghd(h, static_cast<std::size_t>(k.floor_nonneg()), mode, budget);
        std::cerr << "measured iwidth " << res.measured_iwidth;
        if (mode.bmip)
            std::cerr << ", " << mode.c << "-miwidth " << res.measured_miwidth;
        std::cerr << ", " << res.subedge_count << " subedges\n";
        if (res.unsound_if)
            std::cerr << "UNSOUND-IF: measured intersection width exceeds the mode's assumption\n";
        result = std::move(res.decomposition);
    }
    else {
        FhdOptions opts;
        opts.rank_mode = rank_mode;
        opts.budget = budget;
        opts.frac.enforce_disjoint_w = ! lax_disjoint_w;
        if (! c_text.empty() && c_text != "auto")
            opts.c = std::stoul(c_text);
        auto res = solve_fhd(h, k, opts);
        std::cerr << "c " << res.c_used << " (searched up to " << res.c_cap_searched
                  << "), degree " << res.measured_degree << ", iwidth " << res.measured_iwidth
                  << ", rank " << res.measured_rank << ", lemma constant "
                  << res.lemma_c_bound.str() << "\n";
        result = std::move(res.decomposition);
    }

    if (! result.has_value())
        return exit_reject;
    emit(out_path, write_decomposition(h, *result));
    return exit_ok;
}

int cmd_validate(const std::string & kind_text, const std::string & k_text,
        const std::string & hg_path, const std::string & decomp_path)
{
    DecompKind kind = parse_kind(kind_text);
    Rational k = parse_k(k_text);
    Hypergraph h = read_hypergraph_file(hg_path);
    auto file = read_decomposition_file(decomp_path, h);
    for (const auto & w : file.warnings)
        std::cerr << "warning: " << w << "\n";
    file.tree.kind = kind;

    auto violations = validate(h, file.tree, k);
    if (kind == DecompKind::FHD)
        for (const auto & v : check_weak_special(h, file.tree))
            violations.push_back(v);
    if (violations.empty()) {
        std::cout << "ok width " << width(file.tree).str_canonical() << "\n";
        return exit_ok;
    }
    for (const auto & v : violations)
        std::cout << "violation: " << violation_text(h, file.tree, v) << "\n";
    return exit_reject;
}

int cmd_gen3sat(const std::string & dimacs_path, const std::string & formula_text,
        const std::string & assignment_text, bool emit_witness, const std::string & prefix)
{
    CnfFormula phi;
    if (! dimacs_path.empty())
        phi = CnfFormula::parse_dimacs(read_text_file(dimacs_path));
    else if (! formula_text.empty())
        phi = CnfFormula::parse_compact(formula_text);
    else
        throw Error("gen-3sat needs --dimacs or --formula");

    auto [h, layout] = reduce_3sat(phi);

    std::string expected = "unknown (width 2 iff satisfiable)";
    auto sat = phi.satisfiable();
    if (sat.has_value())
        expected = *sat ? "2" : ">2 EXPECTED-WIDTH>2-UNVERIFIED";

    write_text_file(prefix + ".hg", write_hypergraph(h));
    write_text_file(prefix + ".layout", layout.sidecar_text(expected));
    std::cout << "vertices " << h.vertex_count() << ", edges " << h.edge_count() << "\n";

    if (emit_witness || ! assignment_text.empty()) {
        if (assignment_text.empty())
            throw Error("--emit-witness needs --assignment");
        std::vector<bool> sigma;
        for (char c : assignment_text) {
            if (c == '0' || c == 'F' || c == 'f')
                sigma.push_back(false);
            else if (c == '1' || c == 'T' || c == 't')
                sigma.push_back(true);
            else
                throw Error("assignment must be a 0/1 string");
        }
        auto tree = witness_ghd(h, layout, phi, sigma);
        write_text_file(prefix + ".ghd", write_decomposition(h, tree));
        std::cout << "witness width " << width(tree).str_canonical() << "\n";
    }
    return exit_ok;
}

int cmd_gen_gadget(const std::string & m1_text, const std::string & m2_text,
        const std::string & out_path)
{
    auto split = [](const std::string & text) {
        std::vector<std::string> out;
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ','))
            if (! item.empty())
                out.push_back(item);
        return out;
    };
    Hypergraph h = gadget_h0(split(m1_text), split(m2_text));
    emit(out_path, write_hypergraph(h));
    return exit_ok;
}

int cmd_pad(std::size_t l, std::size_t q, const std::string & file, const std::string & out_path)
{
    Hypergraph h = read_hypergraph_file(file);
    emit(out_path, write_hypergraph(pad_width(h, l, q)));
    return exit_ok;
}

int cmd_approx(const std::string & method, const std::string & hg_path,
        const std::string & fhd_path, const std::string & out_path)
{
    Hypergraph h = read_hypergraph_file(hg_path);
    auto file = read_decomposition_file(fhd_path, h);
    file.tree.kind = DecompKind::FHD;
    DecompositionTree ghd;
    if (method == "bagwise")
        ghd = fhd_to_ghd_bagwise(h, file.tree);
    else if (method == "degree")
        ghd = fhd_to_ghd_degree(h, file.tree);
    else
        throw Error("unknown method " + method + " (expected bagwise|degree)");
    std::cerr << "width " << width(file.tree).str_canonical() << " -> "
              << width(ghd).str_canonical() << "\n";
    emit(out_path, write_decomposition(h, ghd));
    return exit_ok;
}

int cmd_bounds(const std::string & k_text, const std::string & file, bool csv)
{
    Rational k = parse_k(k_text);
    Hypergraph h = read_hypergraph_file(file);
    auto rep = bound_report(h, k);
    if (csv)
        std::cout << rep.csv_row() << "\n";
    else
        std::cout << rep.text();
    return exit_ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"hypergraph decomposition toolkit"};
    app.require_subcommand(1);

    std::size_t budget = env_or("HGD_BUDGET_SUBEDGES", default_subedge_budget);
    std::size_t vc_cap = env_or("HGD_VC_CAP", default_vc_cap);

    auto * analyze_cmd = app.add_subcommand("analyze", "structural properties of hypergraph files");
    std::vector<std::string> analyze_files;
    std::string analyze_cs = "3,4";
    bool analyze_csv = false;
    std::size_t jobs = 1;
    analyze_cmd->add_option("files", analyze_files, "hypergraph files");
    analyze_cmd->add_option("--c", analyze_cs, "multi-intersection widths to report");
    analyze_cmd->add_flag("--csv", analyze_csv, "machine-readable output");
    analyze_cmd->add_option("--vc-cap", vc_cap, "vertex cap for exact VC computation");
    analyze_cmd->add_option("--jobs", jobs, "parallel workers");

    auto * solve_cmd = app.add_subcommand("solve", "decide width <= k and emit a decomposition");
    std::string solve_kind, solve_k, solve_mode = "bip", solve_c = "auto", solve_file, solve_out;
    bool rank_mode = false, lax_w = false;
    solve_cmd->add_option("--kind", solve_kind, "hd|ghd|fhd")->required();
    solve_cmd->add_option("-k", solve_k, "width bound, integer or p/q")->required();
    solve_cmd->add_option("--mode", solve_mode, "ghd augmentation: bip|bmip:C");
    solve_cmd->add_option("--c", solve_c, "fhd fractional-part bound: N or auto");
    solve_cmd->add_flag("--rank-mode", rank_mode, "bounded-rank shortcut (fhd)");
    solve_cmd->add_flag("--lax-disjoint-w", lax_w, "drop the W/S disjointness check (fhd)");
    solve_cmd->add_option("--budget", budget, "subedge budget");
    solve_cmd->add_option("-o", solve_out, "output decomposition file");
    solve_cmd->add_option("file", solve_file, "hypergraph file")->required();

    auto * validate_cmd = app.add_subcommand("validate", "check a decomposition file");
    std::string val_kind, val_k, val_hg, val_decomp;
    validate_cmd->add_option("--kind", val_kind, "hd|ghd|fhd")->required();
    validate_cmd->add_option("-k", val_k, "width bound")->required();
    validate_cmd->add_option("hypergraph", val_hg)->required();
    validate_cmd->add_option("decomposition", val_decomp)->required();

    auto * gen3_cmd = app.add_subcommand("gen-3sat", "hardness reduction instance generator");
    std::string gen_dimacs, gen_formula, gen_assignment, gen_prefix = "reduction";
    bool gen_witness = false;
    gen3_cmd->add_option("--dimacs", gen_dimacs, "DIMACS CNF file");
    gen3_cmd->add_option("--formula", gen_formula, "clauses '1 -2 3; -1 2 -3'");
    gen3_cmd->add_option("--assignment", gen_assignment, "0/1 string");
    gen3_cmd->add_flag("--emit-witness", gen_witness, "write the width-2 witness GHD");
    gen3_cmd->add_option("-o", gen_prefix, "output file prefix");

    auto * gadget_cmd = app.add_subcommand("gen-gadget", "the 16-edge width-2 gadget");
    std::string gm1, gm2, gadget_out;
    gadget_cmd->add_option("--m1", gm1, "comma-separated M1 vertices");
    gadget_cmd->add_option("--m2", gm2, "comma-separated M2 vertices");
    gadget_cmd->add_option("-o", gadget_out, "output file");

    auto * pad_cmd = app.add_subcommand("pad", "width padding");
    std::size_t pad_l = 1, pad_q = 0;
    std::string pad_file, pad_out;
    pad_cmd->add_option("--l", pad_l, "shift amount")->required();
    pad_cmd->add_option("--q", pad_q, "rational denominator (0 = integer case)");
    pad_cmd->add_option("file", pad_file)->required();
    pad_cmd->add_option("-o", pad_out, "output file");

    auto * approx_cmd = app.add_subcommand("approx", "FHD -> GHD conversions");
    std::string approx_method, approx_hg, approx_fhd, approx_out;
    approx_cmd->add_option("--method", approx_method, "bagwise|degree")->required();
    approx_cmd->add_option("hypergraph", approx_hg)->required();
    approx_cmd->add_option("fhd", approx_fhd)->required();
    approx_cmd->add_option("-o", approx_out, "output file");

    auto * bounds_cmd = app.add_subcommand("bounds", "approximation bound report");
    std::string bounds_k, bounds_file;
    bool bounds_csv = false;
    bounds_cmd->add_option("-k", bounds_k, "width bound")->required();
    bounds_cmd->add_option("file", bounds_file)->required();
    bounds_cmd->add_flag("--csv", bounds_csv);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze_cmd))
            return cmd_analyze(analyze_files, analyze_cs, analyze_csv, vc_cap, jobs);
        if (app.got_subcommand(solve_cmd))
            return cmd_solve(solve_kind, solve_k, solve_mode, solve_c, rank_mode, lax_w,
                    solve_file, solve_out, budget);
        if (app.got_subcommand(validate_cmd))
            return cmd_validate(val_kind, val_k, val_hg, val_decomp);
        if (app.got_subcommand(gen3_cmd))
            return cmd_gen3sat(gen_dimacs, gen_formula, gen_assignment, gen_witness, gen_prefix);
        if (app.got_subcommand(gadget_cmd))
            return cmd_gen_gadget(gm1, gm2, gadget_out);
        if (app.got_subcommand(pad_cmd))
            return cmd_pad(pad_l, pad_q, pad_file, pad_out);
        if (app.got_subcommand(approx_cmd))
            return cmd_approx(approx_method, approx_hg, approx_fhd, approx_out);
        if (app.got_subcommand(bounds_cmd))
            return cmd_bounds(bounds_k, bounds_file, bounds_csv);
    }
    catch (const BudgetError & ex) {
        std::cerr << "budget exceeded: " << ex.what() << "\n";
        return exit_budget;
    }
    catch (const std::exception & ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
