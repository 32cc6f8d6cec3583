#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "oracles.hpp"
#include "trikraft/prefix_code.hpp"

using namespace trikraft;

namespace {

std::vector<Codeword> make_words(const std::vector<std::string>& bits) {
    std::vector<Codeword> words;
    words.reserve(bits.size());
    for (const std::string& w : bits) {
        words.emplace_back(w);
    }
    return words;
}

std::multiset<int> leaf_depths(const CodeTree& tree) {
    std::multiset<int> depths;
    for (std::size_t w = 0; w < tree.words().size(); ++w) {
        depths.insert(tree.node(tree.leaf_of_word(static_cast<int>(w))).depth);
    }
    return depths;
}

} // namespace

TEST_CASE("codewords are validated") {
    CHECK(Codeword("0110").length() == 4);
    CHECK(Codeword("1").bit(0) == 1);
    CHECK_THROWS_AS(Codeword(""), std::domain_error);
    CHECK_THROWS_AS(Codeword("01x"), std::domain_error);
}

TEST_CASE("kraft sums are exact") {
    CHECK(kraft_sum(std::vector<int>{1, 2, 3, 3}) == ExactRational(1));
    CHECK(kraft_sum(std::vector<int>{1, 2, 3, 3}).to_string() == "1");
    CHECK(kraft_sum(std::vector<int>{1}) == ExactRational(1, 2));
    CHECK(kraft_sum(std::vector<int>{2, 2, 2, 2}) == ExactRational(1));
    CHECK(kraft_sum(std::vector<int>{1, 1, 2}) == ExactRational(5, 4));
    CHECK(kraft_sum(std::vector<int>{}) == ExactRational(0));
    CHECK_THROWS_AS(kraft_sum(std::vector<int>{1, 0}), std::domain_error);
    CHECK_THROWS_AS(kraft_sum(std::vector<int>{-2}), std::domain_error);
}

TEST_CASE("kraft sums honor the radix") {
    CHECK(kraft_sum(std::vector<int>{1, 1, 1}, 3) == ExactRational(1));
    CHECK(kraft_sum(std::vector<int>{1}, 3) == ExactRational(1, 3));
    CHECK(kraft_sum(std::vector<int>{1, 2}, 4) == ExactRational(5, 16));
    CHECK_THROWS_AS(kraft_sum(std::vector<int>{1}, 1), std::domain_error);
}

TEST_CASE("large exponents stay exact") {
    std::vector<int> lengths;
    for (int k = 1; k <= 100; ++k) {
        lengths.push_back(k);
    }
    // 1/2 + 1/4 + ... + 2^-100 = (2^100 - 1) / 2^100.
    const ExactRational sum = kraft_sum(lengths);
    CHECK(sum.numerator().to_string() == "1267650600228229401496703205375");
    CHECK(sum.denominator().to_string() == "1267650600228229401496703205376");
    CHECK(sum < ExactRational(1));
}

TEST_CASE("prefix-freeness check") {
    CHECK(is_prefix_free(make_words({"0", "10", "110", "111"})));
    CHECK_FALSE(is_prefix_free(make_words({"0", "01"})));
    CHECK(is_prefix_free(std::vector<Codeword>{}));
    CHECK_FALSE(is_prefix_free(make_words({"10", "10"})));
    CHECK(is_prefix_free(make_words({"00", "01", "10", "11"})));
    CHECK_FALSE(is_prefix_free(make_words({"111", "1", "00"})));
}

TEST_CASE("build_tree on the four-word code") {
    const auto tree = build_tree(make_words({"0", "10", "110", "111"}));
    CHECK(tree.node_count() == 7);
    CHECK(leaf_depths(tree) == std::multiset<int>{1, 2, 3, 3});
    CHECK(tree.bit_path(tree.leaf_of_word(0)) == "0");
    CHECK(tree.bit_path(tree.leaf_of_word(3)) == "111");
    // Root and internal nodes carry no words.
    CHECK(tree.node(CodeTree::root()).word_index == -1);
}

TEST_CASE("build_tree errors identify the words") {
    CHECK(build_tree(make_words({"00", "01", "10", "11"})).node_count() == 7);
    CHECK_THROWS_AS(build_tree(make_words({"0", "00"})), PrefixViolationError);
    try {
        build_tree(make_words({"0", "00"}));
        FAIL("expected PrefixViolationError");
    } catch (const PrefixViolationError& e) {
        CHECK(e.prefix().str() == "0");
        CHECK(e.extension().str() == "00");
    }
    // Same pair, reversed insertion order.
    try {
        build_tree(make_words({"00", "0"}));
        FAIL("expected PrefixViolationError");
    } catch (const PrefixViolationError& e) {
        CHECK(e.prefix().str() == "0");
        CHECK(e.extension().str() == "00");
    }
    CHECK_THROWS_AS(build_tree(make_words({"10", "10"})), DuplicateWordError);
}

TEST_CASE("trie node count equals 1 + distinct prefixes") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        const auto bits = oracles::random_prefix_free_code(rng, 10);
        const auto tree = build_tree(make_words(bits));
        REQUIRE(tree.node_count() == oracles::trie_node_count_by_prefixes(bits));
    }
}

TEST_CASE("canonical construction reproduces the four-word code") {
    const auto code = kraft_construct(std::vector<int>{1, 2, 3, 3});
    REQUIRE(code.size() == 4);
    CHECK(code[0].str() == "0");
    CHECK(code[1].str() == "10");
    CHECK(code[2].str() == "110");
    CHECK(code[3].str() == "111");
    CHECK(is_prefix_free(code));
}

TEST_CASE("canonical construction basics") {
    const auto pair = kraft_construct(std::vector<int>{1, 1});
    CHECK(pair[0].str() == "0");
    CHECK(pair[1].str() == "1");
    CHECK(kraft_construct(std::vector<int>{}).empty());
    const auto complete = kraft_construct(std::vector<int>{2, 2, 2, 2});
    CHECK(complete[0].str() == "00");
    CHECK(complete[3].str() == "11");
    // Input order does not matter; the output is the canonical sorted code.
    const auto shuffled = kraft_construct(std::vector<int>{3, 1, 3, 2});
    CHECK(shuffled[0].str() == "0");
    CHECK(shuffled[3].str() == "111");
}

TEST_CASE("construction rejects oversubscribed lengths with the exact sum") {
    try {
        kraft_construct(std::vector<int>{1, 1, 2});
        FAIL("expected KraftViolationError");
    } catch (const KraftViolationError& e) {
        CHECK(e.sum() == ExactRational(5, 4));
        CHECK(std::string(e.what()) == "KraftViolation 5/4");
    }
    CHECK_THROWS_AS(kraft_construct(std::vector<int>{1, 1, 1}), KraftViolationError);
}

TEST_CASE("depth-two coloring alternates by level") {
    const auto tree = build_tree(make_words({"0", "10", "110", "111"}));
    const auto colors = depth_two_coloring(tree);
    for (std::size_t id = 0; id < tree.node_count(); ++id) {
        const int depth = tree.node(static_cast<int>(id)).depth;
        CHECK(colors[id] == (depth % 2 == 0 ? NodeColor::Red : NodeColor::Blue));
    }
    CHECK(colors[CodeTree::root()] == NodeColor::Red);
}

TEST_CASE("depth-two coloring of trivial and complete trees") {
    const auto single = build_tree(std::vector<Codeword>{});
    CHECK(single.node_count() == 1);
    CHECK(depth_two_coloring(single) == std::vector<NodeColor>{NodeColor::Red});

    const auto complete = build_tree(make_words({"00", "01", "10", "11"}));
    const auto colors = depth_two_coloring(complete);
    std::map<NodeColor, int> counts;
    for (NodeColor color : colors) {
        ++counts[color];
    }
    CHECK(counts[NodeColor::Red] == 5);  // root + four depth-2 leaves
    CHECK(counts[NodeColor::Blue] == 2); // the two depth-1 nodes
}

TEST_CASE("parent and child never share a color") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        const auto tree = build_tree(make_words(oracles::random_prefix_free_code(rng, 9)));
        const auto colors = depth_two_coloring(tree);
        for (std::size_t id = 1; id < tree.node_count(); ++id) {
            REQUIRE(colors[id] != colors[tree.node(static_cast<int>(id)).parent]);
        }
    }
}

TEST_CASE("leaf report for the four-word code") {
    const auto tree = build_tree(make_words({"0", "10", "110", "111"}));
    const auto report = leaf_color_repetition(tree);
    REQUIRE(report.entries.size() == 4);
    CHECK(report.entries[0].word.str() == "0");
    CHECK(report.entries[0].depth == 1);
    CHECK(report.entries[0].color == NodeColor::Blue);
    CHECK(report.entries[1].depth == 2);
    CHECK(report.entries[1].color == NodeColor::Red);
    CHECK(report.entries[2].depth == 3);
    CHECK(report.entries[2].color == NodeColor::Blue);
    CHECK(report.entries[3].depth == 3);
    CHECK(report.entries[3].color == NodeColor::Blue);
    CHECK(report.same_parity_same_color);
}

TEST_CASE("leaf parity repetition holds for arbitrary trees") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 100; ++trial) {
        const auto tree = build_tree(make_words(oracles::random_prefix_free_code(rng, 11)));
        CHECK(leaf_color_repetition(tree).same_parity_same_color);
    }
    const auto complete = build_tree(make_words({"00", "01", "10", "11"}));
    const auto report = leaf_color_repetition(complete);
    for (const auto& entry : report.entries) {
        CHECK(entry.color == NodeColor::Red);
    }
    CHECK(report.same_parity_same_color);
}

TEST_CASE("random prefix-free codes satisfy the inequality exactly") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        const auto bits = oracles::random_prefix_free_code(rng, 12);
        const auto words = make_words(bits);
        REQUIRE(is_prefix_free(words));
        std::vector<int> lengths;
        for (const auto& w : words) {
            lengths.push_back(static_cast<int>(w.length()));
        }
        REQUIRE(kraft_sum(lengths) <= ExactRational(1));
        REQUIRE(oracles::kraft_admissible_u64(lengths));
    }
}

TEST_CASE("construction round-trips admissible multisets and rejects the rest") {
    std::mt19937 rng(90210);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> lengths;
        const int count = 1 + static_cast<int>(rng() % 14);
        for (int i = 0; i < count; ++i) {
            lengths.push_back(1 + static_cast<int>(rng() % 12));
        }
        const bool admissible = oracles::kraft_admissible_u64(lengths);
        CAPTURE(trial);
        if (admissible) {
            const auto code = kraft_construct(lengths);
            REQUIRE(is_prefix_free(code));
            std::multiset<int> produced;
            for (const auto& w : code) {
                produced.insert(static_cast<int>(w.length()));
            }
            REQUIRE(produced == std::multiset<int>(lengths.begin(), lengths.end()));
            // Rebuilding the trie recovers the same depth multiset.
            REQUIRE(leaf_depths(build_tree(code)) == produced);
        } else {
            REQUIRE_THROWS_AS(kraft_construct(lengths), KraftViolationError);
        }
    }
}

TEST_CASE("color names") {
    CHECK(node_color_name(NodeColor::Red) == "red");
    CHECK(node_color_name(NodeColor::Blue) == "blue");
}
