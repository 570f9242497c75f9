#include <mpart/arity.hh>
#include <mpart/blowup.hh>
#include <mpart/canonical.hh>
#include <mpart/cli.hh>
#include <mpart/encodings.hh>
#include <mpart/error.hh>
#include <mpart/hadamard.hh>
#include <mpart/homomorphism.hh>
#include <mpart/mps.hh>
#include <mpart/obstructions.hh>
#include <mpart/satgadget.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>

namespace mpart {

namespace {
    struct Limits
    {
        std::uint64_t max_maps = default_bruteforce_cap;
        std::uint64_t max_nodes = 0;
        double timeout_secs = 60;
        unsigned jobs = 1;

        auto solve_options() const -> SolveOptions
        {
            SolveOptions o;
            o.max_nodes = max_nodes;
            o.timeout = std::chrono::milliseconds(std::int64_t(timeout_secs * 1000));
            o.jobs = jobs;
            return o;
        }
    };

    auto load(const std::string & path) -> LStructure
    {
        try {
            return parse_mps(read_file(path));
        }
        catch (const ParseError & e) {
            throw ValidationError(path + ": " + e.what());
        }
    }

    auto load_cnf(const std::string & path) -> Cnf3
    {
        try {
            return parse_dimacs(read_file(path));
        }
        catch (const ParseError & e) {
            throw ValidationError(path + ": " + e.what());
        }
    }

    auto load_family(const std::string & dir) -> std::vector<LStructure>
    {
        namespace fs = std::filesystem;
        if (! fs::is_directory(dir))
            throw ValidationError("'" + dir + "' is not a directory");
        std::vector<fs::path> files;
        for (auto & entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".mps")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        std::vector<LStructure> family;
        for (auto & f : files)
            family.push_back(load(f.string()));
        return family;
    }

    auto parse_category(const std::string & text) -> Category
    {
        auto cat = category_from_string(text);
        if (! cat)
            throw ValidationError("unknown category '" + text + "'");
        return *cat;
    }

    auto image_line(const HomMap & map) -> std::string
    {
        std::string line;
        for (auto e : map.image)
            line += (line.empty() ? "" : " ") + std::to_string(e);
        return line;
    }
}

auto run_cli(std::vector<std::string> args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Matrix partition toolkit: label structures, homomorphisms and reductions", "mpart"};
    app.require_subcommand(1);
    app.fallthrough();

    Limits limits;
    app.add_option("--max-maps", limits.max_maps, "Cap on candidate maps for brute force")->capture_default_str();
    app.add_option("--max-nodes", limits.max_nodes, "Cap on search nodes, 0 for none")->capture_default_str();
    app.add_option("--timeout-secs", limits.timeout_secs, "Wall-clock budget per search, 0 for none")
        ->capture_default_str();
    app.add_option("--jobs", limits.jobs, "Worker threads; output does not depend on it")
        ->capture_default_str()
        ->check(CLI::Range(1U, 256U));

    std::function<int()> action;

    // solve
    std::string g_path, h_path;
    bool all = false, brute = false;
    auto * solve = app.add_subcommand("solve", "Decide whether G maps to H and print a witness");
    solve->add_option("G", g_path)->required();
    solve->add_option("H", h_path)->required();
    auto * all_flag = solve->add_flag("--all", all, "List every homomorphism in lexicographic order");
    solve->add_flag("--brute-force", brute, "Decide by exhaustive enumeration")->excludes(all_flag);
    solve->callback([&] {
        action = [&] {
            auto g = load(g_path), h = load(h_path);
            if (brute) {
                bool yes = hom_exists_bruteforce(g, h, limits.max_maps);
                out << "HOM " << (yes ? "yes" : "no") << '\n';
                return yes ? exit_yes : exit_no;
            }
            if (all) {
                std::vector<std::string> lines;
                auto count = enumerate_homomorphisms(
                    g, h,
                    [&](const HomMap & m) {
                        lines.push_back(image_line(m));
                        return true;
                    },
                    limits.solve_options());
                out << "HOM " << (count ? "yes" : "no") << '\n' << "count " << count << '\n';
                for (auto & l : lines)
                    out << "map " << l << '\n';
                return count ? exit_yes : exit_no;
            }
            auto w = find_homomorphism(g, h, limits.solve_options());
            out << "HOM " << (w ? "yes" : "no") << '\n';
            if (w)
                out << serialize_map(*w);
            return w ? exit_yes : exit_no;
        };
    });

    // core
    std::string a_path;
    auto * core = app.add_subcommand("core", "Print the core of A as an induced substructure");
    core->add_option("A", a_path)->required();
    core->callback([&] {
        action = [&] {
            auto a = load(a_path);
            auto kept = core_elements(a, limits.solve_options());
            out << "# core " << (kept.size() == a.size() ? "yes" : "no") << ", kept elements";
            for (auto e : kept)
                out << ' ' << e;
            out << '\n' << serialize_mps(induced_substructure(a, kept));
            return exit_yes;
        };
    });

    auto * trivial = app.add_subcommand("trivial", "Check whether some element has a * diagonal on every symbol");
    trivial->add_option("H", h_path)->required();
    trivial->callback([&] {
        action = [&] {
            bool yes = is_trivial_target(load(h_path));
            out << "trivial " << (yes ? "yes" : "no") << '\n';
            return yes ? exit_yes : exit_no;
        };
    });

    auto * encode = app.add_subcommand("encode-csp", "Translate an empty-category structure to the doubled signature");
    encode->add_option("A", a_path)->required();
    encode->callback([&] { action = [&] { return out << serialize_mps(to_csp(load(a_path))), exit_yes; }; });

    auto * decode = app.add_subcommand("decode-csp", "Translate a doubled-signature csp structure back");
    decode->add_option("A", a_path)->required();
    decode->callback([&] { action = [&] { return out << serialize_mps(from_csp(load(a_path))), exit_yes; }; });

    unsigned k = 0;
    auto * hadamard = app.add_subcommand("hadamard", "Print the Sylvester matrix of order 2^K");
    hadamard->add_option("K", k)->required();
    hadamard->callback([&] { action = [&] { return out << to_text(sylvester(k)), exit_yes; }; });

    // blowup
    std::size_t target_size = 0;
    std::string target_path, projection_path;
    auto * blowup = app.add_subcommand("blowup", "Replace * labels of G by Hadamard blocks");
    blowup->add_option("G", g_path)->required();
    auto * size_opt = blowup->add_option("--target-size", target_size, "Size of the intended target");
    auto * target_opt = blowup->add_option("--target", target_path, "Read the target size from this file");
    size_opt->excludes(target_opt);
    blowup->add_option("--projection", projection_path, "Also write the projection map here");
    blowup->callback([&] {
        action = [&] {
            if (target_path.empty() && size_opt->count() == 0)
                throw ValidationError("blowup needs --target-size or --target");
            auto m = target_path.empty() ? target_size : load(target_path).size();
            auto result = star_to_01(load(g_path), m);
            if (! projection_path.empty())
                write_file(projection_path, serialize_map(result.projection));
            out << "# block size " << result.block_size << '\n' << serialize_mps(result.structure);
            return exit_yes;
        };
    });

    // arity
    std::string signature_text;
    auto * arity = app.add_subcommand("arity", "Pack many relations into one, or unpack");
    arity->require_subcommand(1);
    auto * pack = arity->add_subcommand("pack", "Pack A into a single relation with a marker element");
    pack->add_option("A", a_path)->required();
    pack->callback([&] { action = [&] { return out << serialize_mps(pack_structure(load(a_path))), exit_yes; }; });
    auto * unpack = arity->add_subcommand("unpack", "Recover a base instance from a packed one");
    unpack->add_option("G", g_path)->required();
    unpack->add_option("--signature", signature_text, "Base signature, e.g. \"R/2 S/3\"")->required();
    unpack->callback([&] {
        action = [&] {
            auto base = Signature::parse(signature_text);
            auto result = unpack_instance(load(g_path), base);
            if (auto * no = std::get_if<NoCertificate>(&result)) {
                out << "# no certificate: " << to_string(no->reason) << ": " << no->detail << '\n';
                out << serialize_mps(designated_no_instance(base));
            }
            else
                out << serialize_mps(std::get<LStructure>(result));
            return exit_yes;
        };
    });

    auto * b2m = app.add_subcommand("b2m", "Rewrite a star graph over a many-relation signature");
    b2m->require_subcommand(1);
    for (auto which : {"target", "instance"}) {
        auto * sub = b2m->add_subcommand(which, std::string("Rewrite a graph ") + which);
        sub->add_option("G", g_path)->required();
        sub->add_option("--signature", signature_text, "Signature, first symbol of arity >= 2")->required();
        bool is_target = std::string(which) == "target";
        sub->callback([&, is_target] {
            action = [&, is_target] {
                auto g = load(g_path);
                auto sigma = Signature::parse(signature_text);
                out << serialize_mps(is_target ? binary_to_many_target(g, sigma) : binary_to_many_instance(g, sigma));
                return exit_yes;
            };
        });
    }

    auto * m2b = app.add_subcommand("m2b", "Rewrite a many-relation instance as a star graph");
    m2b->require_subcommand(1);
    auto * m2b_instance = m2b->add_subcommand("instance", "Join the first relation over its trailing coordinates");
    m2b_instance->add_option("B", a_path)->required();
    m2b_instance->callback(
        [&] { action = [&] { return out << serialize_mps(many_to_binary_instance(load(a_path))), exit_yes; }; });

    // obstructions
    std::string cat_text, mode_text = "inc", family_dir;
    std::size_t max_size = 0, universe_bound = 0;
    auto * obstructions = app.add_subcommand("obstructions", "List minimal obstructions up to a size bound");
    obstructions->add_option("H", h_path)->required();
    obstructions->add_option("--cat", cat_text, "Category of the candidates: 01, star, empty")->required();
    obstructions->add_option("--max-size", max_size, "Largest candidate size");
    obstructions->add_option("--mode", mode_text, "inc or hom")->capture_default_str()->check(CLI::IsMember({"inc", "hom"}));
    obstructions->add_option("--universe-bound", universe_bound, "Size bound for hom-minimality (defaults to --max-size)");
    obstructions->add_option("--family", family_dir, "Only test the .mps files in this directory (inc mode)");
    obstructions->callback([&] {
        action = [&] {
            auto h = load(h_path);
            auto cat = parse_category(cat_text);
            ObstructionReport report;
            if (! family_dir.empty()) {
                if (mode_text != "inc")
                    throw ValidationError("--family is only supported with --mode inc");
                report = inclusion_minimal_among(h, cat, load_family(family_dir));
            }
            else if (max_size == 0)
                throw ValidationError("obstructions needs --max-size or --family");
            else if (mode_text == "inc")
                report = inclusion_minimal_obstructions(h, cat, max_size);
            else
                report = hom_minimal_obstructions(h, cat, max_size, universe_bound ? universe_bound : max_size);
            out << serialize_report(report);
            return exit_yes;
        };
    });

    auto * duality = app.add_subcommand("duality", "Check a candidate duality set up to a size bound");
    duality->add_option("H", h_path)->required();
    duality->add_option("--family", family_dir, "Directory of .mps files forming the family")->required();
    duality->add_option("--max-size", max_size, "Largest structure tested")->required();
    duality->add_option("--cat", cat_text, "Category of the tested structures (defaults to H's)");
    duality->callback([&] {
        action = [&] {
            auto h = load(h_path);
            auto cat = cat_text.empty() ? h.category() : parse_category(cat_text);
            auto family = load_family(family_dir);
            auto result = duality_holds(family, h, cat, max_size);
            out << "family " << family.size() << '\n' << "max-size " << max_size << '\n';
            if (result.holds) {
                out << "duality holds\n";
                return exit_yes;
            }
            out << "duality fails, counterexample:\n" << serialize_mps(*result.counterexample);
            return exit_no;
        };
    });

    // sat
    std::string cnf_path, out_dir;
    auto * sat = app.add_subcommand("sat", "3-SAT hardness gadget");
    sat->require_subcommand(1);
    auto * build = sat->add_subcommand("build", "Write the tree, the target and their bookkeeping");
    build->add_option("F", cnf_path)->required();
    build->add_option("--out", out_dir, "Output directory")->required();
    build->callback([&] {
        action = [&] {
            auto gadget = build_gadget(load_cnf(cnf_path));
            namespace fs = std::filesystem;
            fs::create_directories(out_dir);
            auto path = [&](const char * name) { return (fs::path(out_dir) / name).string(); };
            write_file(path("tree.mps"), serialize_mps(gadget.tree));
            write_file(path("target.mps"), serialize_mps(gadget.target));
            write_file(path("tree.places"), serialize_places(gadget.tree_places));
            write_file(path("target.places"), serialize_places(gadget.target_places));
            out << "tree.mps " << gadget.tree.size() << " elements, root " << gadget.root_tree << '\n';
            out << "target.mps " << gadget.target.size() << " elements, root " << gadget.root_target << '\n';
            out << "tree.places\ntarget.places\n";
            return exit_yes;
        };
    });
    auto * verify = sat->add_subcommand("verify", "Compare brute-force SAT with the homomorphism verdict");
    verify->add_option("F", cnf_path)->required();
    verify->callback([&] {
        action = [&] {
            auto cnf = load_cnf(cnf_path);
            auto report = verify_reduction(cnf, limits.solve_options());
            out << serialize_reduction_report(cnf, report);
            return report.passed() ? exit_yes : exit_no;
        };
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_yes;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_yes;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }
    catch (const ValidationError & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    }
    catch (const ResourceLimitError & e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_cap;
    }
    catch (const ValidationError & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::filesystem::filesystem_error & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}
