#pragma once

#include "diametrical.hpp"
#include "io.hpp"
#include "labeled_tree.hpp"
#include "oracle.hpp"
#include "represent.hpp"
#include "space.hpp"
#include "ugvl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ultratree {

struct CampaignConfig {
    std::uint64_t seed = 12345;
    int trials = 1000;
    int max_points = 8;
};

struct PropertyResult {
    std::string name;
    int pass = 0;
    int fail = 0;
    std::string first_failure; // offending matrix as JSON, for replay
};

namespace detail {

inline std::set<PointSet> member_sets(const std::vector<Ball>& balls) {
    std::set<PointSet> out;
    for (const auto& b : balls) out.insert(b.members);
    return out;
}

struct Campaign {
    std::vector<PropertyResult> results;
    std::map<std::string, size_t> index;

    void record(const std::string& name, bool ok, const UltraSpace& space) {
        auto it = index.find(name);
        if (it == index.end()) {
            index[name] = results.size();
            results.push_back(PropertyResult{name});
            it = index.find(name);
        }
        PropertyResult& r = results[it->second];
        if (ok) {
            ++r.pass;
        } else {
            ++r.fail;
            if (r.first_failure.empty()) r.first_failure = space_to_json(space).dump();
        }
    }

    void check(const std::string& name, const UltraSpace& space, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (...) {
            ok = false;
        }
        record(name, ok, space);
    }
};

} // namespace detail

// One seeded trial: draw a space (with its generating shape) and run
// every module property against it. Seed splitting is seed + trial.
inline void run_trial(detail::Campaign& campaign, const CampaignConfig& config, int trial) {
    RandomSpec spec;
    spec.seed = config.seed + static_cast<std::uint64_t>(trial);
    spec.max_points = config.max_points;
    auto [space, shape] = random_space_with_shape(spec);

    const auto balls = open_balls(space);
    const auto spheres = centered_spheres(space);
    const std::set<PointSet> ball_sets = detail::member_sets(balls);
    const std::set<PointSet> sphere_sets(spheres.begin(), spheres.end());

    campaign.check("generator-soundness", space, [&] {
        return isomorphic_rooted(representing_tree(space), shape);
    });

    campaign.check("open-balls-oracle", space, [&] {
        return detail::member_sets(oracle_open_balls(space)) == ball_sets;
    });

    campaign.check("balls-laminar-and-centered", space, [&] {
        for (size_t a = 0; a < balls.size(); ++a)
            for (size_t b = a + 1; b < balls.size(); ++b) {
                PointSet inter;
                std::set_intersection(balls[a].members.begin(), balls[a].members.end(),
                                      balls[b].members.begin(), balls[b].members.end(),
                                      std::back_inserter(inter));
                if (!inter.empty() && inter != balls[a].members && inter != balls[b].members)
                    return false;
            }
        // every member of a ball is a center of it
        for (const Ball& b : balls)
            for (int c : b.members) {
                PointSet around;
                for (int x = 0; x < space.size(); ++x)
                    if (space.dist(x, c) <= b.diameter) around.push_back(x);
                if (around != b.members) return false;
            }
        return true;
    });

    campaign.check("sphere-radius-is-diameter", space, [&] {
        for (const auto& s : spheres)
            if (s.size() >= 2 && !centered_sphere_center(space, s)) return false;
        return true;
    });

    campaign.check("discrete-three-way-equivalence", space, [&] {
        const bool cs_in_b =
            std::includes(ball_sets.begin(), ball_sets.end(), sphere_sets.begin(), sphere_sets.end());
        const bool discrete = is_discrete(space);
        const bool equal = ball_sets == sphere_sets;
        return cs_in_b == discrete && discrete == equal;
    });

    campaign.check("ugvl-criteria-agree", space, [&] {
        // is_ugvl itself throws on a criterion mismatch
        return is_ugvl(space) == oracle_is_ugvl(space);
    });

    campaign.check("small-spaces-are-ugvl", space, [&] {
        return space.size() > 3 || is_ugvl(space);
    });

    campaign.check("diametral-parts-are-balls", space, [&] {
        if (space.size() < 2) return true;
        const auto partition = diametral_partition(space);
        for (const auto& part : partition.parts)
            if (!ball_sets.count(part)) return false;
        return has_singleton_part(partition) ==
               centered_sphere_center(space, space.all_points()).has_value();
    });

    if (is_ugvl(space)) {
        campaign.check("generate-eval-roundtrip", space, [&] {
            const LabeledTree tree = generating_tree(space);
            if (!generates_ultrametric(tree)) return false;
            return space_from_tree(tree).same_matrix(space);
        });

        campaign.check("ball-heredity", space, [&] {
            for (const Ball& b : balls)
                if (!is_ugvl(induced_subspace(space, b.members))) return false;
            return true;
        });
    }

    campaign.check("representing-tree-shape-and-balls", space, [&] {
        const auto rt = representing_tree(space);
        if (!validate_representing_shape(rt)) return false;
        std::set<PointSet> payloads;
        for (int i = 0; i < rt.size(); ++i) {
            PointSet members;
            for (const auto& name : rt.node(i).payload) members.push_back(space.index_of(name));
            std::sort(members.begin(), members.end());
            payloads.insert(std::move(members));
        }
        return payloads == ball_sets;
    });

    campaign.check("hausdorff-matches-tree-metric", space, [&] {
        const auto rt = representing_tree(space);
        const LabeledTree free = as_free_tree(rt);
        const UltraSpace ball_space = space_from_tree(free);
        // free-tree vertex i corresponds to representing node i
        std::vector<Ball> node_balls;
        for (int i = 0; i < rt.size(); ++i) {
            PointSet members;
            for (const auto& name : rt.node(i).payload) members.push_back(space.index_of(name));
            std::sort(members.begin(), members.end());
            node_balls.push_back(Ball{members, diameter(space, members)});
        }
        for (int i = 0; i < rt.size(); ++i)
            for (int j = 0; j < rt.size(); ++j) {
                Rat dh = i == j ? Rat(0)
                                : detail::hausdorff_unchecked(space, node_balls[static_cast<size_t>(i)],
                                                              node_balls[static_cast<size_t>(j)]);
                if (dh != ball_space.dist(i, j)) return false;
            }
        return true;
    });

    campaign.check("represent-realize-roundtrips", space, [&] {
        if (!isometric(realize_space(representing_tree(space)), space)) return false;
        return isomorphic_rooted(representing_tree(realize_space(shape)), shape);
    });

    campaign.check("extension-contract", space, [&] {
        const ExtensionResult ext = minimal_extension(space);
        if (static_cast<std::size_t>(ext.extended.size()) !=
            delta(space) + static_cast<std::size_t>(space.size()))
            return false;
        if (!is_ugvl(ext.extended)) return false;
        if (!induced_subspace(ext.extended, space.all_points()).same_matrix(space)) return false;
        const ExtensionResult rev = minimal_extension(space, /*reversed_tiebreak=*/true);
        return isometric(ext.extended, rev.extended);
    });

    if (space.size() <= 7) {
        campaign.check("isometric-oracle", space, [&] {
            // renamed, reversed-order copy must be isometric
            std::vector<std::string> names;
            std::vector<std::vector<Rat>> m(static_cast<size_t>(space.size()),
                                            std::vector<Rat>(static_cast<size_t>(space.size())));
            for (int i = 0; i < space.size(); ++i) {
                names.push_back("q" + std::to_string(i));
                for (int j = 0; j < space.size(); ++j)
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        space.dist(space.size() - 1 - i, space.size() - 1 - j);
            }
            const UltraSpace renamed = UltraSpace::validate(std::move(names), std::move(m));
            if (!isometric(space, renamed) || !oracle_isometric(space, renamed)) return false;
            // an independent draw must agree with the brute-force verdict
            RandomSpec other_spec;
            other_spec.seed = ~(config.seed + static_cast<std::uint64_t>(trial));
            other_spec.max_points = 7;
            const UltraSpace other = random_space(other_spec);
            return isometric(space, other) == oracle_isometric(space, other);
        });
    }
}

inline std::vector<PropertyResult> run_campaign(const CampaignConfig& config) {
    detail::Campaign campaign;
    for (int trial = 0; trial < config.trials; ++trial) run_trial(campaign, config, trial);
    return campaign.results;
}

} // namespace ultratree
