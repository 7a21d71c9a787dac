// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Exits with the number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "generators.hpp"
#include "treeweights/io.hpp"
#include "treeweights/linsys.hpp"
#include "treeweights/multiweight.hpp"
#include "treeweights/oracle.hpp"
#include "treeweights/reconstruct.hpp"

using namespace treeweights;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (detail.empty()) detail = why;
    }
    void require(bool condition, const std::string& why) {
        if (!condition) fail(why);
    }
};

const TopologyCatalog& catalog_all(int n) {
    static std::map<int, TopologyCatalog> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, enumerate_topologies(n, TopologyConstraint::All)).first;
    }
    return it->second;
}

WeightFamily hat_family(const std::vector<Rational>& hats) {
    const int n = static_cast<int>(hats.size());
    std::map<LabelSubset, Rational> entries;
    for (int i = 1; i <= n; ++i) entries.emplace(hat_subset(n, i), hats[i - 1]);
    return WeightFamily(n, n - 1, std::move(entries));
}

bool is_center_labeled_star_shape(const WeightedTree& tree) {
    if (tree.non_leaf_label_count() != 1) return false;
    for (const Edge& e : tree.edges()) {
        if (!tree.is_leaf(e.u) && !tree.is_leaf(e.v)) return false;
    }
    return true;
}

// Deterministic grid weights cycling through six values.
Rational grid_weight(int slot) {
    static const std::array<Rational, 6> values = {Rational(1),    Rational(1, 2),
                                                   Rational(3, 2), Rational(2),
                                                   Rational(5, 2), Rational(3)};
    return values[slot % values.size()];
}

// ---------------------------------------------------------------------------
// 1. tree_core.k_weight agrees with the brute-force oracle: exhaustive sweep
//    over all reduced topologies with n <= 6 under grid weights, plus 1,000
//    random trees with at most 9 vertices.
Check criterion_oracle_equivalence() {
    Check check;
    long swept = 0;
    for (int n = 3; n <= 6 && check.ok; ++n) {
        const auto& catalog = catalog_all(n);
        int index = 0;
        for (const Topology& topo : catalog.items) {
            for (int variant = 0; variant < 2; ++variant) {
                std::map<Edge, Rational> weights;
                int slot = index + variant;
                for (const Edge& e : topo.edges()) weights.emplace(e, grid_weight(slot++));
                const WeightedTree tree(topo.vertices(), std::move(weights),
                                        topo.labels());
                const BruteForceTable table(tree);
                for (int k = 2; k <= n; ++k) {
                    const auto fam = all_k_weights(tree, k);
                    for (const auto& [subset, value] : fam.entries()) {
                        if (table.k_weight(subset) != value) {
                            check.fail("mismatch on a catalog tree with n=" +
                                       std::to_string(n));
                        }
                    }
                }
                ++swept;
            }
            ++index;
            if (!check.ok) break;
        }
    }

    testgen::Rng rng(101);
    int random_done = 0;
    while (random_done < 1000 && check.ok) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const auto tree = rng() % 2 ? testgen::random_reduced_tree(rng, n)
                                    : testgen::random_leaf_only_tree(rng, n);
        if (tree.vertices().size() > 9) continue;
        const BruteForceTable table(tree);
        for (int k = 2; k <= n; ++k) {
            const auto fam = all_k_weights(tree, k);
            for (const auto& [subset, value] : fam.entries()) {
                if (table.k_weight(subset) != value) check.fail("random tree mismatch");
            }
        }
        for (int label = 1; label <= n; ++label) {
            if (table.k_weight(LabelSubset({label})) != 0 ||
                k_weight(tree, LabelSubset({label})) != 0) {
                check.fail("singleton weight is not zero");
            }
        }
        ++random_done;
    }
    check.detail = std::to_string(swept) + " catalog weightings + " +
                   std::to_string(random_done) + " random trees";
    return check;
}

// ---------------------------------------------------------------------------
// 2. Leaf-only moduli: dimension N, 50 interior samples realize exactly,
//    boundary points rejected, for n in {4,5,6}.
Check criterion_open_simplex() {
    Check check;
    testgen::Rng rng(202);
    long realized = 0;
    for (int n = 4; n <= 6 && check.ok; ++n) {
        for (int fam_round = 0; fam_round < 2; ++fam_round) {
            const auto source = testgen::random_leaf_only_tree(rng, n);
            const auto fam = all_k_weights(source, n - 1);
            if (classify_family(fam).status != FamilyStatus::AllStrict) {
                check.fail("leaf-only tree family must be AllStrict");
                break;
            }
            const auto catalog = enumerate_topologies(n, TopologyConstraint::LeafOnly);
            for (const Topology& topo : catalog.items) {
                const auto desc = moduli_description(fam, topo);
                const int N = static_cast<int>(topo.non_twig_edges().size());
                if (N == 0) {
                    check.require(desc.kind == SimplexKind::Point,
                                  "star topology must be a point");
                    const auto tree = realize_on_topology(fam, topo, {});
                    check.require(all_k_weights(tree, n - 1) == fam,
                                  "point realization mismatch");
                    ++realized;
                    continue;
                }
                check.require(desc.kind == SimplexKind::OpenSumBound,
                              "leaf-only moduli must be an open sum simplex");
                check.require(desc.dimension == N, "dimension must equal N");
                for (int sample = 0; sample < 50; ++sample) {
                    std::vector<Rational> coords;
                    for (int i = 0; i < N; ++i) {
                        const int num = 1 + static_cast<int>(rng() % 8);
                        coords.push_back(desc.bound * Rational(num, 9 * N));
                    }
                    const auto tree = realize_on_topology(fam, topo, coords);
                    if (all_k_weights(tree, n - 1) != fam) {
                        check.fail("interior sample does not realize the family");
                        break;
                    }
                    ++realized;
                }
                // Boundary: a zero coordinate and a sum hitting the bound.
                std::vector<Rational> zero_coord(N, desc.bound / (2 * N));
                zero_coord[0] = 0;
                try {
                    realize_on_topology(fam, topo, zero_coord);
                    check.fail("zero coordinate must be rejected");
                } catch (const DomainError&) {
                }
                std::vector<Rational> on_bound(N, desc.bound / N);
                try {
                    realize_on_topology(fam, topo, on_bound);
                    check.fail("sum at the bound must be rejected");
                } catch (const DomainError&) {
                }
                if (!check.ok) break;
            }
            if (!check.ok) break;
        }
    }
    check.detail = std::to_string(realized) + " exact realizations";
    return check;
}

// ---------------------------------------------------------------------------
// 3. Internal-label moduli: SumEquality of dimension N-1; sampled points
//    realize exactly; the generating weights satisfy the sum equality.
Check criterion_sum_equality() {
    Check check;
    testgen::Rng rng(303);
    long realized = 0;
    for (int n = 4; n <= 6 && check.ok; ++n) {
        for (int m = 2; m <= n - 2 && check.ok; ++m) {
            for (int round = 0; round < 3; ++round) {
                const auto source = testgen::random_tree_with_internal_labels(rng, n, m);
                const auto fam = all_k_weights(source, n - 1);
                const auto cls = classify_family(fam);
                check.require(cls.status == FamilyStatus::AllStrict,
                              "family must classify AllStrict");
                check.require(cls.m_max == m, "M must equal the non-leaf-label count");
                const Topology topo = Topology::of(source);
                const auto desc = moduli_description(fam, topo);
                const int N = static_cast<int>(topo.non_twig_edges().size());
                check.require(desc.kind == SimplexKind::SumEquality,
                              "moduli must be a sum-equality simplex");
                check.require(desc.dimension == N - 1, "dimension must be N-1");

                Rational own_sum = 0;
                std::vector<Rational> own_coords;
                for (const Edge& e : topo.non_twig_edges()) {
                    own_coords.push_back(source.weight(e));
                    own_sum += source.weight(e);
                }
                check.require(own_sum == desc.total,
                              "generating weights must satisfy the sum equality");
                const auto own = realize_on_topology(fam, topo, own_coords);
                check.require(own.canonical_string() == source.canonical_string(),
                              "generating weights must be reproduced");

                for (int sample = 0; sample < 10 && check.ok; ++sample) {
                    std::vector<Rational> parts;
                    Rational parts_sum = 0;
                    for (int i = 0; i < N; ++i) {
                        const Rational p(1 + static_cast<int>(rng() % 8));
                        parts.push_back(p);
                        parts_sum += p;
                    }
                    for (auto& p : parts) p = p * desc.total / parts_sum;
                    const auto tree = realize_on_topology(fam, topo, parts);
                    if (all_k_weights(tree, n - 1) != fam) {
                        check.fail("sampled point does not realize the family");
                    }
                    ++realized;
                }
                if (!check.ok) break;
            }
        }
    }
    check.detail = std::to_string(realized) + " exact realizations";
    return check;
}

// ---------------------------------------------------------------------------
// 4. Rigidity: OneEquality families are realized exactly once, by the
//    center-labeled star, across the whole catalog on a grid.
Check criterion_rigidity() {
    Check check;
    testgen::Rng rng(404);
    long searched = 0;
    for (int n = 3; n <= 6 && check.ok; ++n) {
        for (int round = 0; round < 2; ++round) {
            const int center = 1 + static_cast<int>(rng() % n);
            std::map<Edge, Rational> weights;
            std::map<int, int> labels{{center, 0}};
            std::vector<int> vertices{0};
            for (int l = 1; l <= n; ++l) {
                if (l == center) continue;
                vertices.push_back(l);
                labels.emplace(l, l);
                weights.emplace(Edge(0, l), Rational(1 + static_cast<int>(rng() % 4)));
            }
            const WeightedTree star(vertices, weights, labels);
            const auto fam = all_k_weights(star, n - 1);
            const auto cls = classify_family(fam);
            check.require(cls.status == FamilyStatus::OneEquality &&
                              cls.equality_label == center,
                          "star family must be OneEquality at the center");

            const auto rebuilt = reconstruct_equality_star(fam);
            check.require(rebuilt.canonical_string() == star.canonical_string(),
                          "equality star must reproduce the source star");
            const auto corr = nm1_to_two(fam);
            check.require(corr.family_two == all_k_weights(rebuilt, 2),
                          "2-weights must match the correspondence");
            check.require(two_to_nm1(corr.family_two).family_nm1 == fam,
                          "inverse correspondence must recover the family");
            check.require(all_k_weights(rebuilt, n - 1) == fam,
                          "(n-1)-weights must match the family");

            const auto hits = exhaustive_realizability(fam, Rational(1));
            check.require(hits.size() == 1, "exactly one grid realization expected");
            if (!hits.empty()) {
                check.require(
                    hits.front().canonical_string() == star.canonical_string(),
                    "the grid realization must be the rigid star");
            }
            ++searched;
        }
    }
    // Negative control: a violating family has no realization anywhere.
    const auto nothing = exhaustive_realizability(hat_family({1, 1, 5}), Rational(1));
    check.require(nothing.empty(), "violating family must have no realizations");
    check.detail = std::to_string(searched) + " families swept over full catalogs";
    return check;
}

// ---------------------------------------------------------------------------
// 5. Correspondence round-trip on 200 instances plus the star identity.
Check criterion_correspondence() {
    Check check;
    testgen::Rng rng(505);
    int done = 0;
    for (int round = 0; round < 200 && check.ok; ++round) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const int center = 1 + static_cast<int>(rng() % n);
        const auto star = testgen::random_center_labeled_star(rng, n, center);
        const auto fam = all_k_weights(star, n - 1);

        const auto there = nm1_to_two(fam);
        check.require(there.center == center, "center must be the equality label");
        const auto back = two_to_nm1(there.family_two);
        check.require(back.family_nm1 == fam, "round trip must be the identity");
        check.require(back.center == center, "round trip must keep the center");
        check.require(nm1_to_two(back.family_nm1).family_two == there.family_two,
                      "second round trip must be the identity");
        check.require(
            there.family_two == all_k_weights(reconstruct_equality_star(fam), 2),
            "derived 2-weights must equal the star's 2-weights");
        ++done;
    }
    check.detail = std::to_string(done) + " round trips";
    return check;
}

// ---------------------------------------------------------------------------
// 6. Mixed-family equivalence: identical verdicts and coinciding trees.
Check criterion_mixed_equivalence() {
    Check check;
    testgen::Rng rng(606);
    int done = 0;
    std::vector<int> plan(60, 4);
    plan.insert(plan.end(), 30, 5);
    plan.insert(plan.end(), 10, 6);
    for (int m : plan) {
        if (!check.ok) break;
        const int center = 1 + static_cast<int>(rng() % m);
        const auto star = testgen::random_center_labeled_star(rng, m, center);
        const auto base = all_k_weights(star, m - 1);
        std::vector<int> everything(m);
        for (int i = 0; i < m; ++i) everything[i] = i + 1;

        const auto report = mixed_treelike_equivalence(base, LabelSubset(everything));
        check.require(report.base_treelike == report.mixed_treelike,
                      "verdicts must agree");
        check.require(report.base_treelike, "star families must be treelike");
        check.require(report.base_topologies == report.mixed_topologies,
                      "realizing topologies must coincide");
        check.require(report.base_topologies.size() == 1,
                      "rigidity: exactly one realizing topology");
        if (report.base_tree && report.mixed_tree) {
            check.require(report.base_tree->canonical_string() ==
                              report.mixed_tree->canonical_string(),
                          "realizing trees must coincide");
            check.require(
                report.base_tree->canonical_string() == star.canonical_string(),
                "the realizing tree must be the source star");
        } else {
            check.fail("both routes must produce a tree");
        }
        ++done;
    }
    check.detail = std::to_string(done) + " instances";
    return check;
}

// ---------------------------------------------------------------------------
// 7. Rewrite coherence: 1-IO preserves (n-1)-weights on every admissible
//    edge and 1-OI inverts it, on 500 random leaf-only trees.
Check criterion_rewrites() {
    Check check;
    testgen::Rng rng(707);
    int trees_done = 0;
    long edges_done = 0;
    while (trees_done < 500 && check.ok) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const auto tree = testgen::random_leaf_only_tree(rng, n);
        const auto fam = all_k_weights(tree, n - 1);
        const Topology topo = Topology::of(tree);
        for (const Edge& e : topo.non_twig_edges()) {
            const Rational y = tree.weight(e);
            std::vector<int> dropped_side;
            for (int w : tree.shape().neighbors(e.v)) {
                if (w != e.u) dropped_side.push_back(w);
            }
            const auto contracted = r_io(tree, e, 1);
            if (all_k_weights(contracted, n - 1) != fam) {
                check.fail("1-IO changed the (n-1)-weights");
                break;
            }
            const int merged = contracted.shape().has_vertex(e.u) ? e.u : e.v;
            std::vector<Edge> moved;
            for (int w : dropped_side) moved.emplace_back(merged, w);
            const auto restored = r_oi(contracted, merged, moved, y, 1);
            if (restored.canonical_string() != tree.canonical_string()) {
                check.fail("1-OI did not invert the contraction");
                break;
            }
            ++edges_done;
        }
        ++trees_done;
    }
    check.detail = std::to_string(trees_done) + " trees, " +
                   std::to_string(edges_done) + " edge rewrites";
    return check;
}

// ---------------------------------------------------------------------------
// 8. Classification matches the tree shape on 1,000 random reduced trees:
//    OneEquality exactly for center-labeled stars, AllStrict for everything
//    else a tree can generate, M = internal label count when positive.
Check criterion_classification() {
    Check check;
    testgen::Rng rng(808);
    int done = 0, stars_seen = 0, leafy_seen = 0, internal_seen = 0;
    while (done < 1000 && check.ok) {
        const int n = 3 + static_cast<int>(rng() % 5);
        WeightedTree tree = [&]() {
            switch (rng() % 4) {
                case 0:
                    return testgen::random_center_labeled_star(
                        rng, n, 1 + static_cast<int>(rng() % n));
                case 1:
                    return testgen::random_leaf_only_tree(rng, n);
                case 2:
                    return testgen::random_tree_with_internal_labels(
                        rng, n, 1 + static_cast<int>(rng() % std::max(1, n - 2)));
                default:
                    return testgen::random_reduced_tree(rng, n);
            }
        }();
        const auto cls = classify_family(all_k_weights(tree, n - 1));
        const bool star_shape = is_center_labeled_star_shape(tree);
        const int internal_labels = tree.non_leaf_label_count();

        if (cls.status == FamilyStatus::Violation) {
            check.fail("a realized family can never violate the inequalities");
        }
        if (internal_labels == 0) {
            ++leafy_seen;
            check.require(cls.status == FamilyStatus::AllStrict,
                          "leaf-only trees must classify AllStrict");
        } else {
            ++internal_seen;
            check.require(cls.m_max == internal_labels,
                          "M must equal the internal label count");
        }
        if (star_shape) {
            ++stars_seen;
            check.require(cls.status == FamilyStatus::OneEquality,
                          "center-labeled stars must classify OneEquality");
            if (cls.status == FamilyStatus::OneEquality) {
                const int center_vertex = tree.vertex_of_label(cls.equality_label);
                check.require(!tree.is_leaf(center_vertex),
                              "the equality label must sit at the center");
            }
        } else {
            check.require(cls.status == FamilyStatus::AllStrict,
                          "non-star trees must classify AllStrict");
        }
        ++done;
    }
    check.require(stars_seen > 50 && leafy_seen > 50 && internal_seen > 50,
                  "generator must cover all shapes");
    check.detail = std::to_string(done) + " trees (" + std::to_string(stars_seen) +
                   " stars, " + std::to_string(leafy_seen) + " leaf-only, " +
                   std::to_string(internal_seen) + " with internal labels)";
    return check;
}

// ---------------------------------------------------------------------------
// 9. Twig formula audit: w_j = (sum_{k != j} D_hat(k) - (n-2) D_hat(j))/(n-1)
//    is oracle-verified on every star instance; the "-n" coefficient variant
//    fails the same check.
Check criterion_formula_audit() {
    Check check;
    testgen::Rng rng(909);
    int verified = 0;
    for (int n = 3; n <= 6 && check.ok; ++n) {
        for (int round = 0; round < 25; ++round) {
            const auto source = testgen::random_leaf_only_tree(rng, n);
            const auto fam = all_k_weights(source, n - 1);
            std::vector<Rational> hats;
            Rational sum = 0;
            for (int i = 1; i <= n; ++i) {
                hats.push_back(fam.hat(i));
                sum += fam.hat(i);
            }
            const auto star = canonical_pseudostar(fam);
            const auto tw = twigs(star);
            const BruteForceTable table(star);
            for (int j = 1; j <= n; ++j) {
                const Rational derived =
                    (sum - hats[j - 1] - Rational(n - 2) * hats[j - 1]) /
                    Rational(n - 1);
                if (star.weight(tw.at(j)) != derived) {
                    check.fail("pseudostar twig differs from the derived formula");
                }
                if (derived <= 0) check.fail("derived twig must be positive");
                if (table.k_weight(hat_subset(n, j)) != hats[j - 1]) {
                    check.fail("pseudostar fails the oracle");
                }
            }
            ++verified;
        }
    }

    // The "-n" coefficient variant on the fixture (3,4,5) yields a zero twig,
    // so no positive star carries it; and were all variant twigs positive the
    // realized weights would have to differ from the family.
    {
        const std::vector<Rational> hats{3, 4, 5};
        const Rational sum = 12;
        bool variant_fails = false;
        std::map<int, Rational> variant;
        for (int j = 1; j <= 3; ++j) {
            variant[j] = (sum - hats[j - 1] - Rational(3) * hats[j - 1]) / Rational(2);
            if (variant[j] <= 0) variant_fails = true;
        }
        if (!variant_fails) {
            std::map<Edge, Rational> weights;
            std::map<int, int> labels;
            std::vector<int> vertices{0};
            for (int j = 1; j <= 3; ++j) {
                vertices.push_back(j);
                labels.emplace(j, j);
                weights.emplace(Edge(0, j), variant[j]);
            }
            const WeightedTree star(vertices, weights, labels);
            variant_fails = all_k_weights(star, 2) != hat_family(hats);
        }
        check.require(variant_fails, "the -n coefficient variant must fail");
    }
    check.detail = std::to_string(verified) + " star instances + coefficient audit";
    return check;
}

// ---------------------------------------------------------------------------
// 10. CLI determinism: golden-file comparison for every subcommand, and
//     byte-identical output across repeated runs.
struct CliCase {
    std::string golden;
    std::string args;
};

std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string cmd = std::string(TREEW_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string out;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        out.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Check criterion_cli_golden() {
    Check check;
    const std::string fx = FIXTURE_DIR;
    const std::vector<CliCase> cases = {
        {"kweights_star3_k2.out", "kweights --tree " + fx + "/tree_star3.json --k 2"},
        {"kweights_star3_k3.out", "kweights --tree " + fx + "/tree_star3.json --k 3"},
        {"kweights_caterpillar4_k3.out",
         "kweights --tree " + fx + "/tree_caterpillar4.json --k 3"},
        {"check_one_equality3.out", "check --family " + fx + "/fam_one_equality3.json"},
        {"check_allstrict4.out", "check --family " + fx + "/fam_allstrict4.json"},
        {"check_two_notreelike4.out",
         "check --family " + fx + "/fam_two_notreelike4.json"},
        {"reconstruct_rigid3.out",
         "reconstruct --family " + fx + "/fam_one_equality3.json"},
        {"reconstruct_caterpillar4.out",
         "reconstruct --family " + fx + "/fam_allstrict4.json --topology " + fx +
             "/topo_caterpillar4.json --coords 1"},
        {"reconstruct_two3.out",
         "reconstruct --family " + fx + "/fam_two_weights3.json"},
        {"reconstruct_sum_equality4.out",
         "reconstruct --family " + fx + "/fam_sum_equality4.json --topology " + fx +
             "/topo_path_internal4.json --coords 3/2"},
        {"moduli_open4.out", "moduli --family " + fx +
                                 "/fam_allstrict4.json --topology " + fx +
                                 "/topo_caterpillar4.json"},
        {"moduli_sum4.out", "moduli --family " + fx +
                                "/fam_sum_equality4.json --topology " + fx +
                                "/topo_path_internal4.json"},
        {"moduli_point3.out", "moduli --family " + fx +
                                  "/fam_one_equality3.json --topology " + fx +
                                  "/topo_star3_center.json"},
        {"moduli_empty3.out", "moduli --family " + fx +
                                  "/fam_one_equality3.json --topology " + fx +
                                  "/topo_star3_leafonly.json"},
        {"convert_nm1_to_2.out",
         "convert --family " + fx + "/fam_one_equality3.json --direction nm1-to-2"},
        {"convert_2_to_nm1.out",
         "convert --family " + fx + "/fam_star_additive4.json --direction 2-to-nm1"},
        {"extend_spider5.out",
         "extend --family " + fx + "/fam_spider5.json --subset 1,2,3,4"},
        {"op_contract.out",
         "op --tree " + fx + "/tree_caterpillar4.json --contract 5,6 --r 1"},
        {"op_split.out",
         "op --tree " + fx + "/tree_star4_even.json --split \"5;3,4;3/2\" --r 1"},
        {"topologies_n4.out", "topologies --n 4"},
        {"topologies_n4_m2.out", "topologies --n 4 --nonleaf 2"},
        {"oracle_path_internal.out",
         "oracle --tree " + fx + "/tree_path_internal.json --subset 2,3,4"},
    };
    int matched = 0;
    for (const CliCase& c : cases) {
        const auto [code, out] = run_cli(c.args);
        if (code != 0) {
            check.fail(c.golden + ": exit code " + std::to_string(code));
            continue;
        }
        std::ifstream golden_file(std::string(GOLDEN_DIR) + "/" + c.golden,
                                  std::ios::binary);
        if (!golden_file) {
            check.fail(c.golden + ": golden file missing");
            continue;
        }
        std::ostringstream golden;
        golden << golden_file.rdbuf();
        if (out != golden.str()) {
            check.fail(c.golden + ": output differs from the golden file");
            continue;
        }
        const auto [code2, out2] = run_cli(c.args);
        if (code2 != 0 || out2 != out) {
            check.fail(c.golden + ": repeated run differs");
            continue;
        }
        ++matched;
    }
    check.detail = std::to_string(matched) + "/" + std::to_string(cases.size()) +
                   " golden outputs matched twice";
    return check;
}

struct Criterion {
    std::string name;
    std::function<Check()> run;
    double budget_seconds;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"oracle equivalence", criterion_oracle_equivalence, 120.0},
        {"leaf-only moduli (open simplex)", criterion_open_simplex, 120.0},
        {"internal-label moduli (sum equality)", criterion_sum_equality, 120.0},
        {"rigidity of the equality case", criterion_rigidity, 180.0},
        {"(n-1) <-> 2 correspondence round-trip", criterion_correspondence, 120.0},
        {"mixed-family equivalence", criterion_mixed_equivalence, 300.0},
        {"rewrite coherence (1-IO / 1-OI)", criterion_rewrites, 120.0},
        {"classification soundness", criterion_classification, 120.0},
        {"twig formula audit", criterion_formula_audit, 120.0},
        {"CLI determinism (golden files)", criterion_cli_golden, 120.0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Check check;
        try {
            check = criteria[i].run();
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (elapsed > criteria[i].budget_seconds) {
            check.ok = false;
            check.detail +=
                " [exceeded " + std::to_string(criteria[i].budget_seconds) + "s budget]";
        }
        std::printf("[%s] %zu. %s: %s (%.1fs)\n", check.ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), check.detail.c_str(), elapsed);
        if (!check.ok) ++failures;
    }
    return failures;
}
