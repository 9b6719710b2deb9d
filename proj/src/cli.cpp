#include "qhex/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "qhex/identity.hpp"
#include "qhex/render.hpp"
#include "qhex/verify.hpp"

namespace qhex {

namespace {

std::uint64_t enumeration_cap() {
    if (const char* env = std::getenv("QHEX_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("QHEX_CAP must be a positive integer");
    }
    return kDefaultEnumerationCap;
}

DentSequence parse_dents(const std::string& csv) {
    std::vector<std::int64_t> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const long long v = std::stoll(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad dent value: " + item);
        values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("empty dent list");
    return DentSequence(std::move(values));
}

struct RegionArgs {
    int m = 1;
    int k = 0;
    std::string dents;
    bool all = false;
    bool pretty = false;
};

void add_region_options(CLI::App* cmd, RegionArgs& args) {
    cmd->add_option("-m", args.m, "number of paths")->required();
    cmd->add_option("-k", args.k, "height parameter")->required();
    cmd->add_option("--dents", args.dents, "comma-separated dent positions a_1<...<a_m")->required();
    cmd->add_flag("--all", args.all, "compute all three routes and require agreement");
    cmd->add_flag("--pretty", args.pretty, "also print a human-readable form");
}

LaurentPoly run_route(const std::string& route, const RegionSpec& region, std::uint64_t cap) {
    if (route == "family") return family_gf(region, cap);
    if (route == "lgv") return tiling_gf(region);
    if (route == "closed") {
        if (!region.in_window())
            throw std::invalid_argument(
                "closed route requires dents inside the window [-(m+k-1), m-1]");
        return closed_product_gf(region);
    }
    throw std::invalid_argument("unknown route: " + route);
}

int region_command(const std::string& route, const RegionArgs& args, std::ostream& out,
                   std::ostream& err) {
    const RegionSpec region(args.m, args.k, parse_dents(args.dents));
    const std::uint64_t cap = enumeration_cap();
    LaurentPoly value;
    if (args.all) {
        if (!region.in_window()) {
            err << "error: --all requires dents inside the window [-(m+k-1), m-1]\n";
            return kExitUsage;
        }
        const LaurentPoly enumerated = family_gf(region, cap);
        const LaurentPoly determinant = tiling_gf(region);
        const LaurentPoly product = closed_product_gf(region);
        if (!(enumerated == determinant && determinant == product)) {
            err << "error: routes disagree on this region\n";
            return kExitInternal;
        }
        value = determinant;
    } else {
        value = run_route(route, region, cap);
    }
    out << to_canonical_json(value) << "\n";
    if (args.pretty) {
        out << "value = " << value.to_string() << "\n";
        if (route == "closed" && !args.all) {
            const auto [pf, reduced] = reduce(region);
            (void)reduced;
            out << "prefactor = (" << pf.value.num.to_string() << ") / (" << pf.value.den.to_string()
                << ")\n";
            out << "product(q^4) = "
                << product_rhs({region.k, region.dents}).substitute_power(4).to_string() << "\n";
        }
    }
    return kExitOk;
}

int gf_command(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
               const std::string& method, bool pretty, std::ostream& out) {
    const PathSpec spec{{a, b}, {c, d}};
    const LaurentPoly dp = gf_dp(spec);
    if (method == "dp") {
        out << to_canonical_json(dp) << "\n";
        if (pretty) out << "value = " << dp.to_string() << "\n";
        return kExitOk;
    }
    // Closed form; infeasible endpoints have value zero.
    RationalFn closed = (a > c || b < d) ? RationalFn::from_poly(LaurentPoly::zero())
                                         : gf_closed(spec);
    const bool matches = rf_eq(closed, dp);
    out << "{\"num\":" << to_canonical_json(closed.num) << ",\"den\":" << to_canonical_json(closed.den)
        << ",\"matches_dp\":" << (matches ? "true" : "false") << "}\n";
    if (pretty)
        out << "value = (" << closed.num.to_string() << ") / (" << closed.den.to_string() << ")\n";
    return matches ? kExitOk : kExitInternal;
}

int verify_command(const std::string& suite, const verify::SuiteParams& params, std::ostream& out) {
    const verify::SweepReport report = verify::run_suite(suite, params);
    out << "suite=" << suite << " cases=" << report.total << " passed=" << report.passed
        << " failed=" << report.failed << " skipped=" << report.skipped << "\n";
    if (!report.first_failure.empty()) out << "first_failure: " << report.first_failure << "\n";
    return report.ok() ? kExitOk : kExitVerifyFailed;
}

int render_command(const RegionArgs& args, std::optional<std::uint64_t> family_index,
                   bool tiling_only, const std::string& out_path, std::ostream& out) {
    const RegionSpec region(args.m, args.k, parse_dents(args.dents));
    const std::uint64_t index = family_index.value_or(0);
    const Scene scene = build_scene(region, index, !tiling_only, enumeration_cap());
    const std::string svg = scene_to_svg(scene);
    if (out_path.empty() || out_path == "-") {
        out << svg;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
        file << svg;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tiling generating functions of quartered hexagons with dents"};
    app.require_subcommand(1);

    // gf
    std::int64_t ga = 0, gb = 0, gc = 0, gd = 0;
    std::string gf_method = "dp";
    bool gf_pretty = false;
    CLI::App* gf_cmd = app.add_subcommand("gf", "single-path generating function");
    gf_cmd->add_option("a", ga, "start x")->required();
    gf_cmd->add_option("b", gb, "start y")->required();
    gf_cmd->add_option("c", gc, "end x")->required();
    gf_cmd->add_option("d", gd, "end y")->required();
    gf_cmd->add_option("--method", gf_method, "dp | closed")
        ->check(CLI::IsMember({"dp", "closed"}));
    gf_cmd->add_flag("--pretty", gf_pretty, "also print a human-readable form");

    RegionArgs family_args, lgv_args, closed_args;
    CLI::App* family_cmd = app.add_subcommand("family", "tiling GF by family enumeration");
    add_region_options(family_cmd, family_args);
    CLI::App* lgv_cmd = app.add_subcommand("lgv", "tiling GF by the path-matrix determinant");
    add_region_options(lgv_cmd, lgv_args);
    CLI::App* closed_cmd = app.add_subcommand("closed", "tiling GF by the closed product formula");
    add_region_options(closed_cmd, closed_args);

    std::string suite;
    verify::SuiteParams params;
    bool serial = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(verify::suite_names()));
    verify_cmd->add_option("--max-m", params.max_m, "largest matrix/region size");
    verify_cmd->add_option("--max-k", params.max_k, "largest height parameter");
    verify_cmd->add_option("--seed", params.seed, "seed for randomized cases");
    verify_cmd->add_flag("--serial", serial, "run cases on one thread");

    RegionArgs render_args;
    std::optional<std::uint64_t> render_family;
    bool render_tiling = false;
    std::string render_out;
    CLI::App* render_cmd = app.add_subcommand("render", "render a family and its tiling as SVG");
    render_cmd->add_option("-m", render_args.m, "number of paths")->required();
    render_cmd->add_option("-k", render_args.k, "height parameter")->required();
    render_cmd->add_option("--dents", render_args.dents, "comma-separated dent positions")->required();
    render_cmd->add_option("--family", render_family, "family index to draw (default 0)");
    render_cmd->add_flag("--tiling", render_tiling, "draw the tiling without the path overlay");
    render_cmd->add_option("-o,--out", render_out, "output file ('-' for stdout)");

    std::vector<const char*> argv;
    argv.push_back("qhex");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gf_cmd->parsed()) return gf_command(ga, gb, gc, gd, gf_method, gf_pretty, out);
        if (family_cmd->parsed()) return region_command("family", family_args, out, err);
        if (lgv_cmd->parsed()) return region_command("lgv", lgv_args, out, err);
        if (closed_cmd->parsed()) return region_command("closed", closed_args, out, err);
        if (verify_cmd->parsed()) {
            params.options.parallel = !serial;
            if (std::getenv("QHEX_CAP")) params.cap = enumeration_cap();
            return verify_command(suite, params, out);
        }
        if (render_cmd->parsed())
            return render_command(render_args, render_family, render_tiling, render_out, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const InternalDisagreement& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qhex
