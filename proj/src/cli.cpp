#include "pgraph/cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include <omp.h>

#include "CLI11.hpp"
#include "pgraph/atlas.hpp"
#include "pgraph/reporting.hpp"

namespace pgraph::cli {

namespace {

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size())
        throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        if (end > pos)
            out.push_back(text.substr(pos, end - pos));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

void write_file(const std::filesystem::path& dir, const std::string& name,
                const std::string& content) {
    std::filesystem::create_directories(dir);
    std::ofstream f(dir / name, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot write " + (dir / name).string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
}

AnalysisOptions analysis_options(const CliConfig& cfg) {
    AnalysisOptions opt;
    opt.graph.max_n = cfg.max_n;
    opt.clique.max_vertices = cfg.clique_bound;
    opt.radii = cfg.radii;
    return opt;
}

std::string vertex_list(const GraphAnalysis& a, const std::vector<VertexId>& vs) {
    std::string out;
    for (VertexId v : vs) {
        if (!out.empty())
            out.push_back(' ');
        out += a.graph.vertex(v).to_string();
    }
    return out;
}

int cmd_report(const CliConfig& cfg, std::ostream& out) {
    const auto analyses = analyze_range(cfg.range.first, cfg.range.last, analysis_options(cfg));
    for (const auto& table : cfg.tables) {
        if (table == "spectra") {
            const auto rows = spectra_report(analyses);
            write_file(cfg.out_dir, "table_spectra.csv", spectra_csv(rows));
            out << "Degree and simplex spectra\n";
            for (const auto& r : rows) {
                out << "n=" << r.n << "  deg {";
                for (std::size_t i = 0; i < r.degree.size(); ++i)
                    out << (i ? "," : "") << r.degree[i];
                out << "}  simp {";
                for (std::size_t i = 0; i < r.simplex.size(); ++i)
                    out << (i ? "," : "") << r.simplex[i];
                out << "}\n";
            }
            out << '\n';
            continue;
        }
        std::vector<TableRow> rows;
        if (table == "basic")
            rows = basic_counts(analyses);
        else if (table == "maxima")
            rows = maxima(analyses);
        else if (table == "central")
            rows = central_spine(analyses);
        else
            throw UsageError("unknown table '" + table + "' (basic, maxima, central, spectra)");
        write_file(cfg.out_dir, "table_" + table + ".csv", table_csv(rows));
        out << table_text(rows) << '\n';
    }
    return kExitOk;
}

std::vector<NGroup> groups_of_four(NRange range) {
    std::vector<NGroup> out;
    for (int first = range.first; first <= range.last; first += 4)
        out.emplace_back(first, std::min(first + 3, range.last));
    return out;
}

int cmd_atlas(const CliConfig& cfg, std::ostream& out) {
    std::vector<AtlasMode> modes;
    for (const auto& m : cfg.modes) {
        if (m == "all") {
            modes.assign(kAllAtlasModes.begin(), kAllAtlasModes.end());
            break;
        }
        try {
            modes.push_back(parse_atlas_mode(m));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }

    const auto opts = analysis_options(cfg);
    const auto analyses = analyze_range(cfg.range.first, cfg.range.last, opts);
    std::size_t documents = 0;
    for (AtlasMode mode : modes) {
        for (const auto& doc : render_series(analyses, mode, groups_of_four(cfg.range))) {
            write_file(cfg.out_dir, doc.name, doc.content);
            out << "wrote " << doc.name << '\n';
            ++documents;
        }
    }
    if (cfg.focus > 0) {
        const auto doc = render_focus(analyze(cfg.focus, opts));
        write_file(cfg.out_dir, doc.name, doc.content);
        out << "wrote " << doc.name << '\n';
        ++documents;
    }
    out << documents << " documents in " << cfg.out_dir.string() << '\n';
    return kExitOk;
}

int cmd_export(const CliConfig& cfg, std::ostream& out) {
    ExportFormat format;
    try {
        format = parse_export_format(cfg.format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto analysis = analyze(cfg.n, analysis_options(cfg));
    for (const auto& file : export_graph(analysis, format)) {
        write_file(cfg.out_dir, file.name, file.content);
        out << "wrote " << file.name << '\n';
    }
    out << "G_" << cfg.n << ": " << analysis.graph.vertex_count() << " vertices, "
        << analysis.graph.edge_count() << " edges\n";
    return kExitOk;
}

int cmd_scan(const CliConfig& cfg, std::ostream& out) {
    if (cfg.scan_radius < 1)
        throw UsageError("--radius must be at least 1");
    const auto analyses = analyze_range(cfg.range.first, cfg.range.last, analysis_options(cfg));
    std::string csv =
        "n,radius,verdict_max_degree,verdict_max_dim_loc,max_degree,max_degree_vertices,"
        "max_dim_loc,max_dim_loc_vertices\n";
    auto verdict = [](const ConcentrationRecord& r, bool contained) {
        return r.axis_empty ? std::string("axis empty") : std::string(contained ? "yes" : "no");
    };
    for (const auto& a : analyses) {
        const auto rec = concentration_record(a, cfg.scan_radius);
        const std::string deg = verdict(rec, rec.degree_contained);
        const std::string dim = verdict(rec, rec.dimension_contained);
        out << "n=" << rec.n << " R=" << rec.radius << "  max-degree vertices in C^(R): " << deg
            << "  max-dim_loc vertices in C^(R): " << dim << '\n';
        csv += std::to_string(rec.n) + ',' + std::to_string(rec.radius) + ',' + deg + ',' + dim +
               ',' + std::to_string(a.invariants.max_degree()) + ',' +
               vertex_list(a, rec.max_degree_vertices) + ',' +
               std::to_string(a.invariants.max_simplex_dimension()) + ',' +
               vertex_list(a, rec.max_dimension_vertices) + '\n';
    }
    write_file(cfg.out_dir, "scan.csv", csv);
    return kExitOk;
}

int cmd_thresholds(const CliConfig& cfg, std::ostream& out) {
    const auto analyses = analyze_range(cfg.range.first, cfg.range.last, analysis_options(cfg));
    std::string csv = "feature,threshold\n";
    for (const auto& feature : builtin_features()) {
        const auto n = emergence_threshold(feature.test, analyses);
        const std::string value = n ? std::to_string(*n) : std::string("none");
        out << feature.name << ": " << (n ? "n = " + value : "not reached by n = " +
                                                                  std::to_string(cfg.range.last))
            << '\n';
        csv += '"' + feature.name + "\"," + value + '\n';
    }
    write_file(cfg.out_dir, "thresholds.csv", csv);
    return kExitOk;
}

} // namespace

NRange parse_range(std::string_view text) {
    NRange r;
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        r.first = r.last = parse_int(text, "range");
    } else {
        r.first = parse_int(text.substr(0, dots), "range start");
        r.last = parse_int(text.substr(dots + 2), "range end");
    }
    if (r.first < 1)
        throw UsageError("range must start at n >= 1");
    if (r.last < r.first)
        throw UsageError("empty range '" + std::string(text) + "'");
    return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    std::string range_text = "1..12";
    std::string tables_text = "basic,maxima,central";
    std::string modes_text = "all";
    std::string radii_text = "1,2";

    CLI::App app{"Partition graph morphology toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
    app.add_option("--max-n", cfg.max_n, "Refuse to build G_n above this n")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--clique-bound", cfg.clique_bound, "Largest neighborhood for clique search")
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads (0: all cores)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);

    auto* report = app.add_subcommand("report", "Emit the small-range tables");
    report->add_option("--range", range_text, "n range A..B")->capture_default_str();
    report->add_option("--tables", tables_text, "basic,maxima,central,spectra")
        ->capture_default_str();

    auto* atlas = app.add_subcommand("atlas", "Render the atlas pages");
    atlas->add_option("--range", range_text, "n range A..B")->capture_default_str();
    atlas->add_option("--modes", modes_text, "all or structure,degree,simplex,central_spine")
        ->capture_default_str();
    atlas->add_option("--focus", cfg.focus, "n of the focused page (0: none)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);

    auto* exp = app.add_subcommand("export", "Export one graph");
    exp->add_option("--n", cfg.n, "n")->required()->check(CLI::PositiveNumber);
    exp->add_option("--format", cfg.format, "json, dot or csv")->required();
    exp->add_option("--radii", radii_text, "Central-region radii flagged in the export")
        ->capture_default_str();

    auto* scan = app.add_subcommand("scan", "Extremal-vertex containment in C^(R)");
    scan->add_option("--range", range_text, "n range A..B")->capture_default_str();
    scan->add_option("--radius", cfg.scan_radius, "R >= 1")->capture_default_str();

    auto* thresholds = app.add_subcommand("thresholds", "First n at which built-in features appear");
    thresholds->add_option("--range", range_text, "n range A..B")->capture_default_str();

    std::vector<std::string> argv_storage{"pgraph"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        cfg.range = parse_range(range_text);
        cfg.tables = split_list(tables_text);
        cfg.modes = split_list(modes_text);
        cfg.radii.clear();
        for (const auto& r : split_list(radii_text)) {
            const int value = parse_int(r, "radius");
            if (value < 0)
                throw UsageError("radii must be nonnegative");
            cfg.radii.push_back(static_cast<std::uint32_t>(value));
        }
        if (cfg.threads < 0)
            throw UsageError("--threads must be nonnegative");
        omp_set_num_threads(cfg.threads > 0 ? cfg.threads : omp_get_num_procs());

        if (cfg.subcommand == "report")
            return cmd_report(cfg, out);
        if (cfg.subcommand == "atlas")
            return cmd_atlas(cfg, out);
        if (cfg.subcommand == "export")
            return cmd_export(cfg, out);
        if (cfg.subcommand == "scan")
            return cmd_scan(cfg, out);
        return cmd_thresholds(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SizeGuardError& e) {
        err << "error: " << e.what() << " (raise --max-n to override)\n";
        return kExitGuard;
    } catch (const CliqueBoundError& e) {
        err << "error: " << e.what() << " (raise --clique-bound to override)\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    }
}

} // namespace pgraph::cli
