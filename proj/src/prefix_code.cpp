#include "trikraft/prefix_code.hpp"

#include <algorithm>
#include <numeric>

namespace trikraft {

Codeword::Codeword(std::string_view bits) : bits_(bits) {
    if (bits_.empty()) {
        throw std::domain_error("codeword must not be empty");
    }
    for (char bit : bits_) {
        if (bit != '0' && bit != '1') {
            throw std::domain_error("codeword may contain only 0 and 1, got \"" + bits_ + "\"");
        }
    }
}

PrefixViolationError::PrefixViolationError(Codeword prefix, Codeword extension)
    : std::runtime_error("\"" + prefix.str() + "\" is a prefix of \"" + extension.str() + "\""),
      prefix_(std::move(prefix)),
      extension_(std::move(extension)) {}

DuplicateWordError::DuplicateWordError(Codeword word)
    : std::runtime_error("duplicate codeword \"" + word.str() + "\""), word_(std::move(word)) {}

KraftViolationError::KraftViolationError(ExactRational sum)
    : std::runtime_error("KraftViolation " + sum.to_string()), sum_(std::move(sum)) {}

std::string CodeTree::bit_path(int id) const {
    std::string path;
    for (int cur = id; cur != root(); cur = nodes_[cur].parent) {
        const Node& parent = nodes_[nodes_[cur].parent];
        path.push_back(parent.child[0] == cur ? '0' : '1');
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> CodeTree::preorder() const {
    std::vector<int> order;
    order.reserve(nodes_.size());
    std::vector<int> stack{root()};
    while (!stack.empty()) {
        const int id = stack.back();
        stack.pop_back();
        order.push_back(id);
        if (nodes_[id].child[1] >= 0) {
            stack.push_back(nodes_[id].child[1]);
        }
        if (nodes_[id].child[0] >= 0) {
            stack.push_back(nodes_[id].child[0]);
        }
    }
    return order;
}

std::string_view node_color_name(NodeColor color) {
    return color == NodeColor::Red ? "red" : "blue";
}

ExactRational kraft_sum(std::span<const int> lengths, int radix) {
    if (radix < 2) {
        throw std::domain_error("radix must be at least 2");
    }
    ExactRational sum;
    for (int length : lengths) {
        if (length < 1) {
            throw std::domain_error("codeword lengths must be positive, got " +
                                    std::to_string(length));
        }
        sum += ExactRational(BigNat(1), BigNat::power(static_cast<std::uint32_t>(radix),
                                                      static_cast<std::uint32_t>(length)));
    }
    return sum;
}

bool is_prefix_free(std::span<const Codeword> words) {
    std::vector<const Codeword*> sorted;
    sorted.reserve(words.size());
    for (const Codeword& word : words) {
        sorted.push_back(&word);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const Codeword* a, const Codeword* b) { return a->str() < b->str(); });
    // After lexicographic sorting a prefix sits directly before some word it
    // prefixes, so one adjacent scan suffices.
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i + 1]->str().starts_with(sorted[i]->str())) {
            return false;
        }
    }
    return true;
}

CodeTree build_tree(std::span<const Codeword> words) {
    CodeTree tree;
    for (const Codeword& word : words) {
        int node = CodeTree::root();
        for (std::size_t i = 0; i < word.length(); ++i) {
            if (tree.nodes_[node].word_index >= 0) {
                throw PrefixViolationError(tree.words_[tree.nodes_[node].word_index], word);
            }
            const int bit = word.bit(i);
            int next = tree.nodes_[node].child[bit];
            if (next < 0) {
                next = static_cast<int>(tree.nodes_.size());
                CodeTree::Node fresh;
                fresh.parent = node;
                fresh.depth = tree.nodes_[node].depth + 1;
                tree.nodes_.push_back(fresh);
                tree.nodes_[node].child[bit] = next;
            }
            node = next;
        }
        if (tree.nodes_[node].word_index >= 0) {
            throw DuplicateWordError(word);
        }
        if (!tree.nodes_[node].is_leaf()) {
            // Some already-inserted word extends this one; walk down to name it.
            int below = node;
            while (tree.nodes_[below].word_index < 0) {
                below = tree.nodes_[below].child[0] >= 0 ? tree.nodes_[below].child[0]
                                                         : tree.nodes_[below].child[1];
            }
            throw PrefixViolationError(word, tree.words_[tree.nodes_[below].word_index]);
        }
        tree.nodes_[node].word_index = static_cast<int>(tree.words_.size());
        tree.words_.push_back(word);
        tree.word_leaves_.push_back(node);
    }
    return tree;
}

std::vector<Codeword> kraft_construct(std::span<const int> lengths) {
    const ExactRational total = kraft_sum(lengths);
    if (total > ExactRational(1)) {
        throw KraftViolationError(total);
    }
    std::vector<int> order(lengths.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return lengths[a] < lengths[b]; });

    const std::size_t max_length =
        lengths.empty() ? 0 : static_cast<std::size_t>(lengths[order.back()]);
    BigNat accumulator; // running sum scaled by 2^max_length
    std::vector<Codeword> code;
    code.reserve(lengths.size());
    for (int index : order) {
        const auto length = static_cast<std::size_t>(lengths[index]);
        BigNat numeral = accumulator;
        numeral.shift_right(max_length - length);
        std::string bits(length, '0');
        for (std::size_t i = 0; i < length; ++i) {
            if (numeral.bit(length - 1 - i)) {
                bits[i] = '1';
            }
        }
        code.emplace_back(bits);
        accumulator += BigNat::power_of_two(max_length - length);
    }
    return code;
}

std::vector<NodeColor> depth_two_coloring(const CodeTree& tree) {
    std::vector<NodeColor> colors(tree.node_count());
    for (std::size_t id = 0; id < tree.node_count(); ++id) {
        colors[id] =
            tree.node(static_cast<int>(id)).depth % 2 == 0 ? NodeColor::Red : NodeColor::Blue;
    }
    return colors;
}

LeafColorReport leaf_color_repetition(const CodeTree& tree) {
    const std::vector<NodeColor> colors = depth_two_coloring(tree);
    LeafColorReport report;
    report.same_parity_same_color = true;
    for (std::size_t w = 0; w < tree.words().size(); ++w) {
        const int leaf = tree.leaf_of_word(static_cast<int>(w));
        report.entries.push_back({tree.words()[w], tree.node(leaf).depth, colors[leaf]});
    }
    for (const auto& a : report.entries) {
        for (const auto& b : report.entries) {
            if (a.depth % 2 == b.depth % 2 && a.color != b.color) {
                report.same_parity_same_color = false;
            }
        }
    }
    return report;
}

} // namespace trikraft
