#ifndef TZETA_INDEX_HPP
#define TZETA_INDEX_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace tzeta {

/// Exponent tuple (k_1,...,k_d), each k_i >= 1.  Immutable value type;
/// the empty index is allowed and admissible by convention.
class Index {
public:
    Index() = default;
    explicit Index(std::vector<int> parts);
    Index(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    int depth() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int height() const;  // number of parts >= 2
    bool empty() const { return parts_.empty(); }

    bool admissible() const;      // d == 0 or k_d >= 2
    bool maximal_height() const;  // d >= 1 and all parts >= 2

    Index reversed() const;

    bool operator==(const Index&) const = default;
    bool operator<(const Index& o) const { return parts_ < o.parts_; }

    std::string str() const;  // "2,3,4,5"; "()" for empty

private:
    std::vector<int> parts_;
};

/// Word over {0,1}; nonempty words start with 1 and end with 0.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::vector<std::uint8_t> bits);

    const std::vector<std::uint8_t>& bits() const { return bits_; }
    int size() const { return static_cast<int>(bits_.size()); }
    bool empty() const { return bits_.empty(); }

    bool operator==(const BinaryWord&) const = default;

    std::string str() const;  // "10100100010000"

private:
    std::vector<std::uint8_t> bits_;
};

/// Index whose parts carry signs; sign -1 is rendered with a trailing 'b'.
class SignedIndex {
public:
    struct Part {
        int k;
        int sign;  // +1 or -1
        bool operator==(const Part&) const = default;
        auto operator<=>(const Part&) const = default;
    };

    SignedIndex() = default;
    explicit SignedIndex(std::vector<Part> parts);
    SignedIndex(std::initializer_list<Part> parts)
        : SignedIndex(std::vector<Part>(parts)) {}
    /// All-positive lift of a plain index.
    explicit SignedIndex(const Index& idx);

    const std::vector<Part>& parts() const { return parts_; }
    int depth() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    /// (k_d, eps_d) != (1, +1); empty index is convergent.
    bool convergent() const;
    bool all_positive() const;
    Index unsigned_index() const;

    bool operator==(const SignedIndex&) const = default;
    bool operator<(const SignedIndex& o) const { return parts_ < o.parts_; }

    std::string str() const;  // "3,3,1,3,1,1,2b"

private:
    std::vector<Part> parts_;
};

enum class IndexClass {
    Admissible,
    MaximalHeight,
    OddOddEven,
    AllAtLeast3,
    OneOneThreeTwo,
};

std::string to_string(IndexClass c);

/// weight, depth, height
struct Measures {
    int weight;
    int depth;
    int height;
    bool operator==(const Measures&) const = default;
};

Measures measures(const Index& idx);

/// lambda^{-1}: admissible index -> word, each part k |-> 1,0^{k-1}.
BinaryWord word_of_index(const Index& idx);
/// lambda: word -> index, splitting before every 1.
Index index_of_word(const BinaryWord& w);

/// beta: run lengths of (a_2,...,a_k,1) split between equal adjacent bits.
Index block_index(const BinaryWord& w);
/// beta^{-1}.
BinaryWord word_of_block_index(const Index& idx);

/// bl = beta o lambda^{-1}; bl(()) = ().
Index bl(const Index& idx);
Index bl_inv(const Index& idx);

/// bl of ({2}^{a_0}, 2+b_1, {2}^{a_1}, ..., 2+b_r, {2}^{a_r}) in closed form:
/// (2a_0+1, {1}^{b_1-1}, 2a_1+3, ..., 2a_{r-1}+3, {1}^{b_r-1}, 2a_r+2),
/// or (2a_0) when r = 0 (a_0 >= 1 required).
/// as.size() == bs.size() + 1; as[i] >= 0, bs[i] >= 1.
Index bl_maximal_height_closed_form(const std::vector<int>& as, const std::vector<int>& bs);

std::set<IndexClass> classify(const Index& idx);

/// Bar over even parts, odd parts untouched.
SignedIndex bar_evens(const Index& idx);

Index reverse(const Index& idx);

// -- text syntax (CLI front end) ------------------------------------------
// Indices: comma-separated integers, a trailing 'b' on a part means a bar.
// Words: bare 0/1 strings.  Throw ParseError on malformed input.

Index parse_index(const std::string& text);
SignedIndex parse_signed_index(const std::string& text);
BinaryWord parse_word(const std::string& text);

// -- enumeration helpers (tests, verification suite) ----------------------

/// All admissible indices with 1 <= weight <= cap, in (weight, lex) order.
std::vector<Index> admissible_indices_up_to(int weight_cap);
/// All maximal-height indices with weight <= cap.
std::vector<Index> maximal_height_indices_up_to(int weight_cap);
/// All words in W_{0,1} with 2 <= |w| <= cap.
std::vector<BinaryWord> words_up_to(int size_cap);

}  // namespace tzeta

#endif
