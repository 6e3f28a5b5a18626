// ultratree: decide whether finite ultrametric spaces are generated by
// vertex-labeled trees, construct generating and representing trees,
// and build minimal extensions. Exit codes: 0 ok/yes, 1 parse error,
// 2 invalid input, 3 negative verdict, 4 property failure.

#include <ultratree/ultratree.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace ultratree;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNegative = 3;
constexpr int kExitPropertyFailure = 4;

UltraSpace load_space(const std::string& path) {
    return space_from_json(parse_json_text(read_file(path)));
}

TreeDocument load_tree(const std::string& path) {
    return tree_from_json(parse_json_text(read_file(path)));
}

int cmd_validate(const std::string& path) {
    UltraSpace space = load_space(path);
    std::cout << "ultrametric: ok, n=" << space.size() << ", diam="
              << format_rat(diameter(space, space.all_points())) << "\n";
    return kExitOk;
}

int cmd_is_ugvl(const std::string& path) {
    UltraSpace space = load_space(path);
    const bool verdict = is_ugvl(space);
    std::cout << "UGVL: " << (verdict ? "yes" : "no") << ", delta=" << delta(space) << "\n";
    return verdict ? kExitOk : kExitNegative;
}

int cmd_generate_tree(const std::string& path, const std::string& format) {
    UltraSpace space = load_space(path);
    LabeledTree tree = generating_tree(space);
    if (format == "dot")
        std::cout << tree_to_dot(tree);
    else
        std::cout << tree_to_json(tree).dump(2) << "\n";
    return kExitOk;
}

int cmd_eval_tree(const std::string& path) {
    TreeDocument doc = load_tree(path);
    UltraSpace space = space_from_tree(doc.tree);
    std::cout << space_to_json(space).dump(2) << "\n";
    return kExitOk;
}

int cmd_representing_tree(const std::string& path, const std::string& format) {
    UltraSpace space = load_space(path);
    RootedLabeledTree tree = representing_tree(space);
    if (format == "dot")
        std::cout << rooted_tree_to_dot(tree);
    else
        std::cout << rooted_tree_to_json(tree).dump(2) << "\n";
    return kExitOk;
}

int cmd_extend(const std::string& path) {
    UltraSpace space = load_space(path);
    ExtensionResult ext = minimal_extension(space);
    json mapping;
    json original = json::object();
    for (size_t i = 0; i < ext.embedding.size(); ++i)
        original[space.name(static_cast<int>(i))] = ext.extended.name(ext.embedding[i]);
    mapping["original"] = std::move(original);
    json added = json::array();
    for (const auto& [name, ball] : ext.added)
        added.push_back({{"name", name}, {"for_ball", ball}});
    mapping["added"] = std::move(added);
    json out;
    out["space"] = space_to_json(ext.extended);
    out["mapping"] = std::move(mapping);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_isometric(const std::string& path_a, const std::string& path_b) {
    UltraSpace a = load_space(path_a);
    UltraSpace b = load_space(path_b);
    const bool verdict = isometric(a, b);
    std::cout << "isometric: " << (verdict ? "yes" : "no") << "\n";
    return verdict ? kExitOk : kExitNegative;
}

int cmd_proptest(std::uint64_t seed, int trials, int max_points) {
    CampaignConfig config{seed, trials, max_points};
    const auto results = run_campaign(config);
    bool all_ok = true;
    int total_pass = 0;
    for (const auto& r : results) {
        if (r.fail == 0) {
            std::cout << "PASS " << r.name << ": " << r.pass << " trials\n";
        } else {
            all_ok = false;
            std::cout << "FAIL " << r.name << ": " << r.fail << " of " << (r.pass + r.fail)
                      << " trials; first offending space: " << r.first_failure << "\n";
        }
        total_pass += r.pass;
    }
    std::cout << "campaign: seed=" << seed << " trials=" << trials << " max_points=" << max_points
              << " checks_passed=" << total_pass << " verdict=" << (all_ok ? "pass" : "fail") << "\n";
    return all_ok ? kExitOk : kExitPropertyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"labeled-tree generated ultrametric spaces"};
    app.require_subcommand(1);

    std::string space_file, tree_file, space_file_b, format = "json";

    auto* validate = app.add_subcommand("validate", "check the ultrametric axioms of a space file");
    validate->add_option("space-file", space_file)->required();

    auto* isugvl = app.add_subcommand("is-ugvl", "decide membership in UGVL and report delta");
    isugvl->add_option("space-file", space_file)->required();

    auto* gentree = app.add_subcommand("generate-tree", "emit a labeled tree generating the space");
    gentree->add_option("space-file", space_file)->required();
    gentree->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

    auto* evaltree = app.add_subcommand("eval-tree", "emit the path-max ultrametric of a labeled tree");
    evaltree->add_option("tree-file", tree_file)->required();

    auto* reptree = app.add_subcommand("representing-tree", "emit the representing tree of a space");
    reptree->add_option("space-file", space_file)->required();
    reptree->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

    auto* extend = app.add_subcommand("extend", "emit the minimal UGVL-extension of a space");
    extend->add_option("space-file", space_file)->required();

    auto* isom = app.add_subcommand("isometric", "decide whether two spaces are isometric");
    isom->add_option("space-file-a", space_file)->required();
    isom->add_option("space-file-b", space_file_b)->required();

    std::uint64_t seed = 12345;
    if (const char* env_seed = std::getenv("ULTRATREE_SEED")) seed = std::strtoull(env_seed, nullptr, 10);
    int trials = 1000;
    int max_points = 8;
    auto* prop = app.add_subcommand("proptest", "run the seeded property campaign");
    prop->add_option("--seed", seed);
    prop->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    prop->add_option("--max-points", max_points)->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(space_file);
        if (isugvl->parsed()) return cmd_is_ugvl(space_file);
        if (gentree->parsed()) return cmd_generate_tree(space_file, format);
        if (evaltree->parsed()) return cmd_eval_tree(tree_file);
        if (reptree->parsed()) return cmd_representing_tree(space_file, format);
        if (extend->parsed()) return cmd_extend(space_file);
        if (isom->parsed()) return cmd_isometric(space_file, space_file_b);
        if (prop->parsed()) return cmd_proptest(seed, trials, max_points);
    } catch (const ultratree::IoError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ultratree::RatParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ultratree::SpaceError& e) {
        std::cerr << "invalid space: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ultratree::TreeError& e) {
        std::cerr << "invalid tree: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ultratree::RepresentError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ultratree::UgvlError& e) {
        if (e.kind == ultratree::UgvlError::Kind::NotUGVL) {
            std::cerr << "not UGVL: " << e.what() << "\n";
            return kExitNegative;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
