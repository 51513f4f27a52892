#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "greyrank/dea.hpp"
#include "greyrank/errors.hpp"
#include "greyrank/fixtures.hpp"
#include "greyrank/io.hpp"

namespace {

using namespace greyrank;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + output_path + "'");
    out << text;
    out.flush();
    if (!out) throw IoError("cannot write '" + output_path + "'");
}

DeaVariant parse_variant(const std::string& name) {
    if (name == "bounded-vrs") return DeaVariant::bounded_vrs;
    if (name == "crs-unbounded") return DeaVariant::crs_unbounded;
    throw ValidationError("unknown variant '" + name +
                          "' (use bounded-vrs or crs-unbounded)");
}

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ValidationError("alpha must lie in [0, 1]");
}

void warn_consistency(double cr) {
    if (cr > 0.1)
        std::cerr << "warning: consistency ratio " << cr
                  << " exceeds the conventional 0.1 threshold; the judgments are "
                     "unusually inconsistent\n";
}

struct Options {
    std::string input;
    std::string fixture;
    std::string matrix;
    std::string format = "table";
    std::string output;
    std::string variant = "bounded-vrs";
    double alpha = 0.5;
    double rho = 0.5;
    double beta = 0.5;
    unsigned threads = 0;
    bool audit = false;
    std::string show;
};

std::string pick_source(const Options& opt) {
    if (!opt.input.empty() && !opt.fixture.empty())
        throw ValidationError("give either --input or --fixture, not both");
    if (opt.input.empty() && opt.fixture.empty())
        throw ValidationError("an input is required: --input PATH or --fixture ID");
    return opt.input.empty() ? opt.fixture : opt.input;
}

int run_rank(const Options& opt) {
    const std::string source = pick_source(opt);
    RunInput in = load_run_input(source);
    std::optional<PairwiseMatrix> pairwise = std::move(in.pairwise);
    if (!opt.matrix.empty()) pairwise = load_pairwise(opt.matrix);

    PipelineOptions pipeline;
    pipeline.alpha = opt.alpha;
    pipeline.rho = opt.rho;
    pipeline.beta = opt.beta;
    pipeline.variant = parse_variant(opt.variant);
    pipeline.with_slacks = opt.audit;
    pipeline.max_threads = opt.threads;

    // The bundled dataset and judgment matrix belong together, so a fixture
    // run may omit the matrix flag.
    if (!pairwise && pipeline.variant == DeaVariant::bounded_vrs) {
        const FixtureInfo* f = find_fixture(source);
        if (f && f->kind == "dataset" && f->id != "table1-raw")
            pairwise = load_pairwise("table3-ahp");
    }

    const GradeReport report = full_pipeline(in.dataset, pairwise, pipeline);
    if (pairwise) warn_consistency(report.consistency_ratio);
    emit(format_report(report, in.dataset, pairwise, parse_output_format(opt.format),
                       opt.audit),
         opt.output);
    return 0;
}

int run_gra(const Options& opt) {
    const std::string source = pick_source(opt);
    const Dataset ds = load_dataset(source);
    check_alpha(opt.alpha);
    const std::size_t m = ds.alternative_count();
    const std::size_t n = ds.attribute_count();
    std::vector<Interval> raw;
    raw.reserve(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            raw.push_back(ds.cell_interval(i, j, opt.alpha));
    const ComparabilityMatrix cm = build_comparability(ds.alternatives, ds.attributes, raw);
    const CoefficientMatrix xi = grey_coefficients(cm, reference_sequence(cm), opt.rho);
    emit(format_coefficients(xi, parse_output_format(opt.format)), opt.output);
    return 0;
}

int run_ahp(const Options& opt) {
    if (opt.matrix.empty()) throw ValidationError("--matrix is required");
    const PairwiseMatrix b = load_pairwise(opt.matrix);
    const PriorityVector pv = principal_eigenvector(b);
    warn_consistency(pv.consistency_ratio);
    emit(format_priorities(b, pv, parse_output_format(opt.format)), opt.output);
    return 0;
}

int run_lp(const Options& opt) {
    if (opt.input.empty()) throw ValidationError("--input is required");
    const LinearProgram lp = load_lp(opt.input);
    const LpSolution sol = solve(lp);
    emit(format_lp_solution(lp, sol, parse_output_format(opt.format)), opt.output);
    return 0;
}

int run_fixtures(const Options& opt) {
    if (!opt.show.empty()) {
        emit(std::string(fixture_content(opt.show)), opt.output);
        return 0;
    }
    std::ostringstream os;
    for (const FixtureInfo& f : fixtures()) {
        os << f.id;
        if (!f.alias.empty()) os << " (alias " << f.alias << ")";
        os << " [" << f.kind << "]: " << f.summary << '\n';
    }
    emit(os.str(), opt.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"greyrank: rank alternatives with fuzzy attribute data by grey "
                 "relational analysis, judgment-derived weight bounds and "
                 "best/worst-frontier grades"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* rank = app.add_subcommand("rank", "run the full ranking pipeline");
    rank->add_option("--input,-i", opt.input, "dataset path (csv/json) or prior report json");
    rank->add_option("--fixture", opt.fixture, "embedded fixture id (see 'fixtures')");
    rank->add_option("--ahp,--matrix", opt.matrix, "pairwise comparison matrix path or fixture id");
    rank->add_option("--alpha", opt.alpha, "alpha-cut level in [0,1]")->capture_default_str();
    rank->add_option("--rho", opt.rho, "distinguishing coefficient in [0,1]")->capture_default_str();
    rank->add_option("--beta", opt.beta, "compromise weight on the optimistic grade")->capture_default_str();
    rank->add_option("--variant", opt.variant, "bounded-vrs or crs-unbounded")->capture_default_str();
    rank->add_option("--format", opt.format, "table, csv or json")->capture_default_str();
    rank->add_option("--output,-o", opt.output, "write to file instead of stdout");
    rank->add_option("--threads", opt.threads, "cap concurrent grade evaluations (0: auto)");
    rank->add_flag("--audit", opt.audit, "include intermediate matrices, weights and slacks");

    CLI::App* gra = app.add_subcommand("gra", "compute grey relational coefficients only");
    gra->add_option("--input,-i", opt.input, "dataset path (csv/json)");
    gra->add_option("--fixture", opt.fixture, "embedded fixture id");
    gra->add_option("--alpha", opt.alpha, "alpha-cut level in [0,1]")->capture_default_str();
    gra->add_option("--rho", opt.rho, "distinguishing coefficient in [0,1]")->capture_default_str();
    gra->add_option("--format", opt.format, "table, csv or json")->capture_default_str();
    gra->add_option("--output,-o", opt.output, "write to file instead of stdout");

    CLI::App* ahp = app.add_subcommand("ahp", "derive priority weights from a pairwise matrix");
    ahp->add_option("--matrix,-m,--input", opt.matrix, "matrix path (csv/json) or fixture id");
    ahp->add_option("--format", opt.format, "table, csv or json")->capture_default_str();
    ahp->add_option("--output,-o", opt.output, "write to file instead of stdout");

    CLI::App* lp = app.add_subcommand("lp", "solve a linear program from a json file");
    lp->add_option("--input,-i", opt.input, "lp json path");
    lp->add_option("--format", opt.format, "table, csv or json")->capture_default_str();
    lp->add_option("--output,-o", opt.output, "write to file instead of stdout");

    CLI::App* fix = app.add_subcommand("fixtures", "list or print the embedded fixtures");
    fix->add_option("--show", opt.show, "print one fixture's raw content");
    fix->add_option("--output,-o", opt.output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rank->parsed()) return run_rank(opt);
        if (gra->parsed()) return run_gra(opt);
        if (ahp->parsed()) return run_ahp(opt);
        if (lp->parsed()) return run_lp(opt);
        if (fix->parsed()) return run_fixtures(opt);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 2;
}
