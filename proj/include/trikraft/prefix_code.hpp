#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trikraft/rational.hpp"

namespace trikraft {

/// Non-empty binary word, most-significant bit first.
class Codeword {
public:
    /// Throws std::domain_error unless bits is a non-empty string over {0,1}.
    explicit Codeword(std::string_view bits);

    std::size_t length() const { return bits_.size(); }
    int bit(std::size_t index) const { return bits_[index] - '0'; }
    const std::string& str() const { return bits_; }

    auto operator<=>(const Codeword&) const = default;

private:
    std::string bits_;
};

/// One word is a proper prefix of another (or make_tree saw a word whose
/// prefix is already a leaf).
class PrefixViolationError : public std::runtime_error {
public:
    PrefixViolationError(Codeword prefix, Codeword extension);
    const Codeword& prefix() const { return prefix_; }
    const Codeword& extension() const { return extension_; }

private:
    Codeword prefix_;
    Codeword extension_;
};

class DuplicateWordError : public std::runtime_error {
public:
    explicit DuplicateWordError(Codeword word);
    const Codeword& word() const { return word_; }

private:
    Codeword word_;
};

/// The requested lengths sum to more than 1 and admit no prefix-free code.
class KraftViolationError : public std::runtime_error {
public:
    explicit KraftViolationError(ExactRational sum);
    const ExactRational& sum() const { return sum_; }

private:
    ExactRational sum_;
};

/// Rooted binary trie. Branch 0 is the upper branch, branch 1 the lower one;
/// codewords sit only on leaves, in the order they were inserted.
class CodeTree {
public:
    struct Node {
        int parent = -1;
        int child[2] = {-1, -1};
        int depth = 0;
        int word_index = -1; // index into words(), -1 when unlabeled

        bool is_leaf() const { return child[0] < 0 && child[1] < 0; }
    };

    std::size_t node_count() const { return nodes_.size(); }
    const Node& node(int id) const { return nodes_.at(id); }
    static constexpr int root() { return 0; }

    const std::vector<Codeword>& words() const { return words_; }
    int leaf_of_word(int word_index) const { return word_leaves_.at(word_index); }

    /// Bits along the root path; empty for the root itself.
    std::string bit_path(int id) const;

    /// Node ids in depth-first order, branch 0 before branch 1.
    std::vector<int> preorder() const;

private:
    friend CodeTree build_tree(std::span<const Codeword> words);

    std::vector<Node> nodes_{Node{}};
    std::vector<Codeword> words_;
    std::vector<int> word_leaves_;
};

enum class NodeColor { Red, Blue };

/// Display names "red"/"blue".
std::string_view node_color_name(NodeColor color);

/// Exact value of sum over radix^-length, as a reduced rational. Lengths
/// must be positive and the radix at least 2 (std::domain_error otherwise).
ExactRational kraft_sum(std::span<const int> lengths, int radix = 2);

/// True iff no word is a proper prefix of another and there are no
/// duplicates. The empty set qualifies.
bool is_prefix_free(std::span<const Codeword> words);

/// Minimal trie holding exactly the given words as labeled leaves. Throws
/// PrefixViolationError or DuplicateWordError when the set is not a code.
CodeTree build_tree(std::span<const Codeword> words);

/// Canonical prefix-free code for the given lengths: sort ascending (stable),
/// then each word is the running Kraft sum of its predecessors, scaled by
/// 2^length and written as a length-bit binary numeral. Throws
/// KraftViolationError carrying the exact sum when it exceeds 1.
std::vector<Codeword> kraft_construct(std::span<const int> lengths);

/// Red/blue by depth parity, root red. Adjacent nodes always differ, so this
/// is a proper 2-coloring of the tree.
std::vector<NodeColor> depth_two_coloring(const CodeTree& tree);

struct LeafColorReport {
    struct Entry {
        Codeword word;
        int depth;
        NodeColor color;
    };
    std::vector<Entry> entries;       // one per word, in insertion order
    bool same_parity_same_color = false;
};

/// Depth and parity color of every labeled leaf, plus whether leaves of equal
/// depth parity share a color (always true under the depth coloring; the
/// per-leaf listing is the informative part).
LeafColorReport leaf_color_repetition(const CodeTree& tree);

} // namespace trikraft
