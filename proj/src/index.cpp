#include "tzeta/index.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "tzeta/error.hpp"

namespace tzeta {

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int k : parts_)
        if (k < 1) throw ParseError("index parts must be >= 1");
}

Index::Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

int Index::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Index::height() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                          [](int k) { return k >= 2; }));
}

bool Index::admissible() const {
    return parts_.empty() || parts_.back() >= 2;
}

bool Index::maximal_height() const {
    return !parts_.empty() &&
           std::all_of(parts_.begin(), parts_.end(), [](int k) { return k >= 2; });
}

Index Index::reversed() const {
    std::vector<int> p(parts_.rbegin(), parts_.rend());
    return Index(std::move(p));
}

std::string Index::str() const {
    if (parts_.empty()) return "()";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        if (b > 1) throw ParseError("binary word bits must be 0 or 1");
    if (!bits_.empty() && (bits_.front() != 1 || bits_.back() != 0))
        throw ParseError("binary word must start with 1 and end with 0");
}

std::string BinaryWord::str() const {
    if (bits_.empty()) return "()";
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

SignedIndex::SignedIndex(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (const auto& p : parts_) {
        if (p.k < 1) throw ParseError("index parts must be >= 1");
        if (p.sign != 1 && p.sign != -1) throw ParseError("signs must be +1 or -1");
    }
}

SignedIndex::SignedIndex(const Index& idx) {
    parts_.reserve(static_cast<std::size_t>(idx.depth()));
    for (int k : idx.parts()) parts_.push_back({k, +1});
}

int SignedIndex::weight() const {
    int w = 0;
    for (const auto& p : parts_) w += p.k;
    return w;
}

bool SignedIndex::convergent() const {
    if (parts_.empty()) return true;
    return !(parts_.back().k == 1 && parts_.back().sign == +1);
}

bool SignedIndex::all_positive() const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const Part& p) { return p.sign == +1; });
}

Index SignedIndex::unsigned_index() const {
    std::vector<int> ks;
    ks.reserve(parts_.size());
    for (const auto& p : parts_) ks.push_back(p.k);
    return Index(std::move(ks));
}

std::string SignedIndex::str() const {
    if (parts_.empty()) return "()";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i].k;
        if (parts_[i].sign < 0) os << 'b';
    }
    return os.str();
}

std::string to_string(IndexClass c) {
    switch (c) {
        case IndexClass::Admissible: return "admissible";
        case IndexClass::MaximalHeight: return "maximal-height";
        case IndexClass::OddOddEven: return "odd..odd-even";
        case IndexClass::AllAtLeast3: return "all-at-least-3";
        case IndexClass::OneOneThreeTwo: return "1{13}2";
    }
    return "?";
}

Measures measures(const Index& idx) {
    return {idx.weight(), idx.depth(), idx.height()};
}

BinaryWord word_of_index(const Index& idx) {
    if (!idx.admissible())
        throw DomainError("word_of_index: index " + idx.str() + " is not admissible");
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(idx.weight()));
    for (int k : idx.parts()) {
        bits.push_back(1);
        for (int i = 1; i < k; ++i) bits.push_back(0);
    }
    return BinaryWord(std::move(bits));
}

Index index_of_word(const BinaryWord& w) {
    std::vector<int> parts;
    const auto& bits = w.bits();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == 1)
            parts.push_back(1);
        else
            ++parts.back();  // front bit is 1, so parts is nonempty here
    }
    return Index(std::move(parts));
}

Index block_index(const BinaryWord& w) {
    if (w.empty()) return Index();
    // s' = (a_2,...,a_k,1); split between equal adjacent bits.
    std::vector<std::uint8_t> s(w.bits().begin() + 1, w.bits().end());
    s.push_back(1);
    std::vector<int> runs;
    int len = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == s[i - 1]) {
            runs.push_back(len);
            len = 1;
        } else {
            ++len;
        }
    }
    runs.push_back(len);
    return Index(std::move(runs));
}

BinaryWord word_of_block_index(const Index& idx) {
    if (idx.empty()) return BinaryWord();
    // Rebuild s' back to front: each block alternates internally, adjacent
    // blocks share the bit value at their boundary, and s' ends with 1.
    const auto& blocks = idx.parts();
    std::vector<std::uint8_t> s(static_cast<std::size_t>(idx.weight()));
    int pos = static_cast<int>(s.size());
    std::uint8_t next_end = 1;  // last bit of the block being written
    for (int j = static_cast<int>(blocks.size()) - 1; j >= 0; --j) {
        std::uint8_t b = next_end;
        for (int i = 0; i < blocks[static_cast<std::size_t>(j)]; ++i) {
            s[static_cast<std::size_t>(--pos)] = b;
            b ^= 1;
        }
        next_end = b ^ 1;  // first bit of this block == last bit of previous
    }
    // s = (1, s'_1, ..., s'_{k-1})
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    bits.push_back(1);
    bits.insert(bits.end(), s.begin(), s.end() - 1);
    return BinaryWord(std::move(bits));
}

Index bl(const Index& idx) {
    return block_index(word_of_index(idx));
}

Index bl_inv(const Index& idx) {
    return index_of_word(word_of_block_index(idx));
}

Index bl_maximal_height_closed_form(const std::vector<int>& as, const std::vector<int>& bs) {
    if (as.size() != bs.size() + 1)
        throw DomainError("bl closed form: need one more a than b");
    for (int a : as)
        if (a < 0) throw DomainError("bl closed form: a_i >= 0 required");
    for (int b : bs)
        if (b < 1) throw DomainError("bl closed form: b_i >= 1 required");
    const int r = static_cast<int>(bs.size());
    if (r == 0) {
        if (as[0] < 1) throw DomainError("bl closed form: r = 0 requires a_0 >= 1");
        return Index({2 * as[0]});
    }
    std::vector<int> parts;
    parts.push_back(2 * as[0] + 1);
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j < bs[static_cast<std::size_t>(i - 1)]; ++j) parts.push_back(1);
        if (i < r)
            parts.push_back(2 * as[static_cast<std::size_t>(i)] + 3);
        else
            parts.push_back(2 * as[static_cast<std::size_t>(r)] + 2);
    }
    return Index(std::move(parts));
}

std::set<IndexClass> classify(const Index& idx) {
    std::set<IndexClass> cs;
    if (idx.admissible()) cs.insert(IndexClass::Admissible);
    if (idx.maximal_height()) cs.insert(IndexClass::MaximalHeight);
    const auto& p = idx.parts();
    const int d = idx.depth();
    if (d >= 1) {
        bool oe = p.back() % 2 == 0;
        for (int i = 0; i + 1 < d && oe; ++i) oe = p[static_cast<std::size_t>(i)] % 2 == 1;
        if (oe) cs.insert(IndexClass::OddOddEven);
        if (std::all_of(p.begin(), p.end(), [](int k) { return k >= 3; }))
            cs.insert(IndexClass::AllAtLeast3);
        bool ote = d >= 2 && p.front() == 1 && p.back() == 2;
        for (int i = 1; i + 1 < d && ote; ++i)
            ote = p[static_cast<std::size_t>(i)] == 1 || p[static_cast<std::size_t>(i)] == 3;
        if (ote) cs.insert(IndexClass::OneOneThreeTwo);
    }
    return cs;
}

SignedIndex bar_evens(const Index& idx) {
    std::vector<SignedIndex::Part> parts;
    parts.reserve(static_cast<std::size_t>(idx.depth()));
    for (int k : idx.parts()) parts.push_back({k, k % 2 == 0 ? -1 : +1});
    return SignedIndex(std::move(parts));
}

Index reverse(const Index& idx) {
    return idx.reversed();
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

int parse_part(const std::string& tok, bool* bar) {
    std::string t = tok;
    *bar = false;
    if (!t.empty() && (t.back() == 'b' || t.back() == 'B')) {
        *bar = true;
        t.pop_back();
    }
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw ParseError("bad index part '" + tok + "'");
    long v = std::stol(t);
    if (v < 1 || v > 1000000) throw ParseError("index part out of range: " + t);
    return static_cast<int>(v);
}

}  // namespace

Index parse_index(const std::string& text) {
    SignedIndex s = parse_signed_index(text);
    if (!s.all_positive()) throw ParseError("bars not allowed here: " + text);
    return s.unsigned_index();
}

SignedIndex parse_signed_index(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty() || t == "()") return SignedIndex();
    std::vector<SignedIndex::Part> parts;
    for (const auto& tok : split_commas(t)) {
        bool bar = false;
        int k = parse_part(tok, &bar);
        parts.push_back({k, bar ? -1 : +1});
    }
    return SignedIndex(std::move(parts));
}

BinaryWord parse_word(const std::string& text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '0')
            bits.push_back(0);
        else if (c == '1')
            bits.push_back(1);
        else
            throw ParseError(std::string("bad word character '") + c + "'");
    }
    return BinaryWord(std::move(bits));
}

namespace {

void enumerate_compositions(int weight, std::vector<int>& cur, int min_last,
                            int min_part, std::vector<Index>& out) {
    if (weight == 0) {
        if (!cur.empty() && cur.back() >= min_last) out.emplace_back(cur);
        return;
    }
    for (int k = min_part; k <= weight; ++k) {
        cur.push_back(k);
        enumerate_compositions(weight - k, cur, min_last, min_part, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Index> admissible_indices_up_to(int weight_cap) {
    std::vector<Index> out;
    for (int w = 2; w <= weight_cap; ++w) {
        std::vector<int> cur;
        enumerate_compositions(w, cur, 2, 1, out);
    }
    return out;
}

std::vector<Index> maximal_height_indices_up_to(int weight_cap) {
    std::vector<Index> out;
    for (int w = 2; w <= weight_cap; ++w) {
        std::vector<int> cur;
        enumerate_compositions(w, cur, 2, 2, out);
    }
    return out;
}

std::vector<BinaryWord> words_up_to(int size_cap) {
    std::vector<BinaryWord> out;
    for (int n = 2; n <= size_cap; ++n) {
        // interior bits free, first = 1, last = 0
        const int free_bits = n - 2;
        for (long mask = 0; mask < (1L << free_bits); ++mask) {
            std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
            bits[0] = 1;
            for (int i = 0; i < free_bits; ++i)
                bits[static_cast<std::size_t>(i + 1)] =
                    static_cast<std::uint8_t>((mask >> i) & 1);
            bits[static_cast<std::size_t>(n - 1)] = 0;
            out.emplace_back(std::move(bits));
        }
    }
    return out;
}

}  // namespace tzeta
