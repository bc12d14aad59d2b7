#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "hgpred/coloring.hpp"
#include "hgpred/graphs.hpp"

using namespace hgpred;

namespace {

// Worked (3,5) example of length 20 with a known five-group coloring.
const char* kLdpc20 =
    "00010000110001000100;"
    "00100100001100000010;"
    "00000000100000011011;"
    "10000001000000010010;"
    "00100011000001000000;"
    "01001000000111000000;"
    "01010000010100001000;"
    "00000001000010110001;"
    "10000100101010000000;"
    "00001010010000100000;"
    "01011000001000000001;"
    "00000100000000101100";

bool groups_independent(const ClassicalCode& code, const std::vector<std::vector<std::size_t>>& groups) {
    for (const auto& grp : groups)
        for (std::size_t i = 0; i < grp.size(); ++i)
            for (std::size_t j = i + 1; j < grp.size(); ++j) {
                const std::uint64_t* a = code.h().row_words(grp[i]);
                const std::uint64_t* b = code.h().row_words(grp[j]);
                for (std::size_t w = 0; w < code.h().words_per_row(); ++w)
                    if (a[w] & b[w]) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("check-adjacency graph: disjoint checks give no edges, shared bits do") {
    ClassicalCode diag(BitMatrix::identity(4));
    CHECK(check_adjacency_graph(diag).num_edges() == 0);

    ClassicalCode chain(BitMatrix::parse("110;011"));
    SimpleGraph g = check_adjacency_graph(chain);
    CHECK(g.num_edges() == 1);
    CHECK(g.has_edge(0, 1));

    // Pairwise support-intersection oracle on a random code.
    ClassicalCode code = random_ldpc(15, 3, 5, 2);
    SimpleGraph adj = check_adjacency_graph(code);
    for (std::size_t a = 0; a < code.num_checks(); ++a)
        for (std::size_t b = a + 1; b < code.num_checks(); ++b) {
            bool meet = false;
            for (std::size_t c = 0; c < code.n(); ++c)
                if (code.h().get(a, c) && code.h().get(b, c)) meet = true;
            CHECK(adj.has_edge(a, b) == meet);
        }
}

TEST_CASE("known color groups of the (3,5) example are independent sets") {
    ClassicalCode code(BitMatrix::parse(kLdpc20), "ldpc20");
    REQUIRE(code.n() == 20);
    REQUIRE(code.num_checks() == 12);
    // 1-based groups from the worked example, converted to row indices.
    std::vector<std::vector<std::size_t>> groups = {
        {3, 5, 11}, {4, 6, 8}, {0, 1, 7}, {2, 9}, {10}};
    CHECK(groups_independent(code, groups));

    CheckColoring mine = greedy_color(check_adjacency_graph(code));
    CHECK(is_valid_coloring(check_adjacency_graph(code), mine));
    CHECK(mine.num_colors <= 5);
    CHECK(groups_independent(code, mine.groups()));
}

TEST_CASE("greedy coloring: edgeless 1 color, complete graph n colors, seeded determinism") {
    CHECK(greedy_color(SimpleGraph(5)).num_colors == 1);
    CHECK(greedy_color(complete_graph(4)).num_colors == 4);

    SimpleGraph g = check_adjacency_graph(random_ldpc(20, 3, 5, 4));
    CheckColoring a = greedy_color(g, 17);
    CheckColoring b = greedy_color(g, 17);
    CHECK(a.color_of == b.color_of);
    CHECK(is_valid_coloring(g, a));
    CHECK(is_valid_coloring(g, greedy_color(g, 99)));
}

TEST_CASE("bipartite cage cycle codes 2-color into the two vertex sides") {
    for (SimpleGraph base : {complete_bipartite_graph(3, 3), heawood_graph(), tutte_coxeter_graph()}) {
        ClassicalCode code = cycle_code(base);
        CheckColoring col = greedy_color(check_adjacency_graph(code));
        CHECK(col.num_colors == 2);
        auto sizes = col.class_sizes();
        std::size_t v = base.num_vertices() / 2;
        CHECK(std::set<std::size_t>{sizes[0], sizes[1]} == std::set<std::size_t>{v, v - 1});
    }
}

TEST_CASE("product coloring partitions the check-type qubits") {
    ClassicalCode c = cycle_code(complete_bipartite_graph(3, 3));
    CssCode code = build_hgp(c, c);
    CheckColoring col = greedy_color(check_adjacency_graph(c));
    ProductColoring pc = product_coloring(col, col, code.layout);
    CHECK(pc.chi1 == 2);
    CHECK(pc.chi2 == 2);
    CHECK(pc.total_qubits() == 25);
    CHECK(verify_product_coloring(pc, c, c));

    // Group sizes are products of the class sizes.
    auto sizes = col.class_sizes();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(pc.group_size(i, j) == sizes[i] * sizes[j]);

    // Two 1-colorings lump every check-type qubit into a single group.
    CheckColoring one{std::vector<std::size_t>(c.num_checks(), 0), 1};
    CssCode diag_code = build_hgp(ClassicalCode(BitMatrix::identity(3)), ClassicalCode(BitMatrix::identity(3)));
    CheckColoring one3{std::vector<std::size_t>(3, 0), 1};
    ProductColoring single = product_coloring(one3, one3, diag_code.layout);
    CHECK(single.groups.size() == 1);
    CHECK(single.group_size(0, 0) == 9);
}

TEST_CASE("3x3 product coloring splits into 9 groups") {
    BitMatrix h = BitMatrix::parse("110;011;101");   // triangle adjacency: 3 colors
    ClassicalCode c(h);
    CheckColoring col = greedy_color(check_adjacency_graph(c));
    CHECK(col.num_colors == 3);
    CssCode code = build_hgp(c, c);
    ProductColoring pc = product_coloring(col, col, code.layout);
    CHECK(pc.groups.size() == 9);
    for (std::size_t g = 0; g < 9; ++g) CHECK(pc.groups[g].size() == 1);
}

TEST_CASE("lifted coloring inherits proto colors and never uses more") {
    BitMatrix proto = BitMatrix::parse("1011;0111;1101");
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> exps = {
        {{0, 0}, 4}, {{0, 2}, 4}, {{0, 3}, 3},
        {{1, 1}, 3}, {{1, 2}, 3}, {{1, 3}, 4},
        {{2, 0}, 3}, {{2, 1}, 4}, {{2, 3}, 3}};
    ClassicalCode lifted = qc_lift(proto, exps, 5);

    ClassicalCode proto_code(proto);
    CheckColoring proto_col = greedy_color(check_adjacency_graph(proto_code));
    CHECK(proto_col.num_colors == 3);

    CheckColoring col = lifted_coloring(proto_col, 5, lifted);
    CHECK(col.num_colors <= proto_col.num_colors);
    CHECK(col.color_of.size() == 15);
    CHECK(is_valid_coloring(check_adjacency_graph(lifted), col));

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> zeros;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (proto.get(r, c)) zeros[{r, c}] = 0;
    ClassicalCode same = qc_lift(proto, zeros, 1);
    CheckColoring trivial = lifted_coloring(proto_col, 1, same);
    CHECK(trivial.color_of == proto_col.color_of);

    // A cross-check with independent greedy recoloring of the full matrix.
    CheckColoring greedy_full = greedy_color(check_adjacency_graph(lifted));
    CHECK(is_valid_coloring(check_adjacency_graph(lifted), greedy_full));
}
